#pragma once

#include "wgcurv/core.hpp"

namespace wgc {

// First- and second-order finite-difference stencils. Gradients are one-sided
// forward differences; second derivatives follow cfg.stencil. Under
// BoundaryPolicy::Replicate every output pixel is computed with clamped
// neighbor reads; under InteriorOnly, pixels whose stencil does not fit are 0.

ScalarField gradient_x(const GrayImage& img, const SchemeConfig& cfg = {});
ScalarField gradient_y(const GrayImage& img, const SchemeConfig& cfg = {});
ScalarField second_xx(const GrayImage& img, const SchemeConfig& cfg = {});
ScalarField second_yy(const GrayImage& img, const SchemeConfig& cfg = {});
ScalarField second_xy(const GrayImage& img, const SchemeConfig& cfg = {});

ScalarField gradient_x(const ScalarField& img, const SchemeConfig& cfg = {});
ScalarField gradient_y(const ScalarField& img, const SchemeConfig& cfg = {});
ScalarField second_xx(const ScalarField& img, const SchemeConfig& cfg = {});
ScalarField second_yy(const ScalarField& img, const SchemeConfig& cfg = {});
ScalarField second_xy(const ScalarField& img, const SchemeConfig& cfg = {});

/// Gaussian curvature K = (Ixx*Iyy - Ixy^2) / (1 + Ix^2 + Iy^2)^2 of the
/// image surface (x, y, I(x, y)), assembled from the five stencils above.
/// threads <= 0 means use all available cores.
ScalarField gaussian_curvature_classical(const GrayImage& img,
                                         const SchemeConfig& cfg = {},
                                         int threads = 1);
ScalarField gaussian_curvature_classical(const ScalarField& img,
                                         const SchemeConfig& cfg = {},
                                         int threads = 1);

/// Weighted Gaussian curvature K^w = (Ixx*Iyy - Ixy^2) / (1 + Ix^2 + Iy^2),
/// i.e. K multiplied by the local area element.
ScalarField weighted_curvature_classical(const GrayImage& img,
                                         const SchemeConfig& cfg = {},
                                         int threads = 1);
ScalarField weighted_curvature_classical(const ScalarField& img,
                                         const SchemeConfig& cfg = {},
                                         int threads = 1);

}  // namespace wgc
