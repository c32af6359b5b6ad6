"""Weighted Gaussian curvature of grayscale images.

Two computation schemes over the image surface (x, y, I(x, y)):

* classical: finite-difference stencils composed into
  K = (Ixx*Iyy - Ixy^2) / (1 + Ix^2 + Iy^2)^2 and
  K^w = (Ixx*Iyy - Ixy^2) / (1 + Ix^2 + Iy^2);
* discrete: the angle deficit 2*pi minus the four corner angles spanned by a
  pixel and its axis neighbors, optionally served from a precomputed table.

Images are 2-D numpy arrays indexed [y, x]; uint8 for 8-bit input, float64
for real-valued surfaces and curvature maps.
"""

from ._core import (
    AngleLut,
    corner_angle,
    curvature_stats,
    gaussian_curvature_classical,
    gradient_x,
    gradient_y,
    neighbor_diffs,
    read_field,
    read_image,
    second_xx,
    second_xy,
    second_yy,
    synthesize,
    visualize_curvature,
    weighted_curvature_classical,
    weighted_curvature_discrete,
    write_field,
    write_image,
)

__version__ = "0.1.0"

__all__ = [
    "AngleLut",
    "corner_angle",
    "curvature_stats",
    "gaussian_curvature_classical",
    "gradient_x",
    "gradient_y",
    "neighbor_diffs",
    "read_field",
    "read_image",
    "second_xx",
    "second_xy",
    "second_yy",
    "synthesize",
    "visualize_curvature",
    "weighted_curvature_classical",
    "weighted_curvature_discrete",
    "write_field",
    "write_image",
]
