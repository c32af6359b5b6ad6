#pragma once

#include "wgcurv/core.hpp"

namespace wgc {

class AngleLut;

/// Corner angle at the center vertex of the triangle spanned by two adjacent
/// axis neighbors with height offsets d_i, d_next over a grid step h:
///
///   theta = arccos( d_i*d_next / sqrt((h^2 + d_i^2) * (h^2 + d_next^2)) )
///
/// The arccos argument is clamped to [-1, 1], so the function is total for
/// h > 0 and the result always lies in [0, pi]. The angle depends only on the
/// triangle's shape: scaling d_i, d_next and h by a common factor leaves it
/// unchanged.
double corner_angle(double d_i, double d_next, double h);

/// The four signed neighbor differences at (x, y). Under Replicate,
/// out-of-range neighbors are read from the nearest valid pixel; under
/// InteriorOnly, (x, y) must be at least one pixel away from every border.
/// Throws std::out_of_range for invalid pixel positions.
NeighborDiffs neighbor_diffs(const GrayImage& img, int x, int y,
                             BoundaryPolicy policy = BoundaryPolicy::Replicate);

/// Weighted Gaussian curvature as the angle deficit 2*pi - sum of the four
/// corner angles formed by consecutive neighbor-difference pairs
/// (d1,d2), (d2,d3), (d3,d4), (d4,d1). Zero on flat and planar images and,
/// up to sampling error, on any developable image surface.
///
/// When `lut` is non-null the angles are read from the table instead of being
/// computed; this requires cfg.pixel_size == 1 (the table is indexed by
/// integer differences at unit grid step). With a full table the result is
/// bit-identical to the trigonometric path.
ScalarField weighted_curvature_discrete(const GrayImage& img,
                                        const SchemeConfig& cfg = {},
                                        const AngleLut* lut = nullptr,
                                        int threads = 1);

/// Real-valued input variant (no LUT; differences are not integers).
ScalarField weighted_curvature_discrete(const ScalarField& img,
                                        const SchemeConfig& cfg = {},
                                        int threads = 1);

}  // namespace wgc
