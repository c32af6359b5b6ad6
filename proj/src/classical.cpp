#include "wgcurv/classical.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wgc {

namespace {

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads <= 0 ? omp_get_max_threads() : threads;
#else
    (void)threads;
    return 1;
#endif
}

template <class Img>
double px(const Img& im, int x, int y) {
    return static_cast<double>(im(x, y));
}

template <class Img>
double pxc(const Img& im, int x, int y) {
    return static_cast<double>(im.at_clamped(x, y));
}

template <class Img>
ScalarField gradient_x_impl(const Img& img, const SchemeConfig& cfg) {
    check_config(cfg);
    check_min_width(img, 2, "gradient_x");
    const double h = cfg.pixel_size;
    ScalarField out(img.width, img.height);
    if (cfg.boundary == BoundaryPolicy::Replicate) {
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                out(x, y) = (pxc(img, x + 1, y) - px(img, x, y)) / h;
    } else {
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x + 1 < img.width; ++x)
                out(x, y) = (px(img, x + 1, y) - px(img, x, y)) / h;
    }
    return out;
}

template <class Img>
ScalarField gradient_y_impl(const Img& img, const SchemeConfig& cfg) {
    check_config(cfg);
    check_min_height(img, 2, "gradient_y");
    const double h = cfg.pixel_size;
    ScalarField out(img.width, img.height);
    if (cfg.boundary == BoundaryPolicy::Replicate) {
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                out(x, y) = (pxc(img, x, y + 1) - px(img, x, y)) / h;
    } else {
        for (int y = 0; y + 1 < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                out(x, y) = (px(img, x, y + 1) - px(img, x, y)) / h;
    }
    return out;
}

template <class Img>
ScalarField second_xx_impl(const Img& img, const SchemeConfig& cfg) {
    check_config(cfg);
    check_min_width(img, 3, "second_xx");
    const double h2 = cfg.pixel_size * cfg.pixel_size;
    const bool standard = cfg.stencil == StencilMode::Standard;
    ScalarField out(img.width, img.height);
    auto stencil = [&](double xp, double xm, double c) {
        return standard ? (xp + xm - 2.0 * c) / h2 : (xp + xm - c) / h2;
    };
    if (cfg.boundary == BoundaryPolicy::Replicate) {
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                out(x, y) = stencil(pxc(img, x + 1, y), pxc(img, x - 1, y), px(img, x, y));
    } else {
        for (int y = 0; y < img.height; ++y)
            for (int x = 1; x + 1 < img.width; ++x)
                out(x, y) = stencil(px(img, x + 1, y), px(img, x - 1, y), px(img, x, y));
    }
    return out;
}

template <class Img>
ScalarField second_yy_impl(const Img& img, const SchemeConfig& cfg) {
    check_config(cfg);
    check_min_height(img, 3, "second_yy");
    const double h2 = cfg.pixel_size * cfg.pixel_size;
    const bool standard = cfg.stencil == StencilMode::Standard;
    ScalarField out(img.width, img.height);
    auto stencil = [&](double yp, double ym, double c) {
        return standard ? (yp + ym - 2.0 * c) / h2 : (yp + ym - c) / h2;
    };
    if (cfg.boundary == BoundaryPolicy::Replicate) {
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                out(x, y) = stencil(pxc(img, x, y + 1), pxc(img, x, y - 1), px(img, x, y));
    } else {
        for (int y = 1; y + 1 < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                out(x, y) = stencil(px(img, x, y + 1), px(img, x, y - 1), px(img, x, y));
    }
    return out;
}

template <class Img>
ScalarField second_xy_impl(const Img& img, const SchemeConfig& cfg) {
    check_config(cfg);
    check_min_size(img, 3, 3, "second_xy");
    const double h2 = cfg.pixel_size * cfg.pixel_size;
    const double div = cfg.stencil == StencilMode::Standard ? 4.0 * h2 : h2;
    ScalarField out(img.width, img.height);
    if (cfg.boundary == BoundaryPolicy::Replicate) {
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                out(x, y) = (pxc(img, x + 1, y + 1) + pxc(img, x - 1, y - 1) -
                             pxc(img, x + 1, y - 1) - pxc(img, x - 1, y + 1)) /
                            div;
    } else {
        for (int y = 1; y + 1 < img.height; ++y)
            for (int x = 1; x + 1 < img.width; ++x)
                out(x, y) = (px(img, x + 1, y + 1) + px(img, x - 1, y - 1) -
                             px(img, x + 1, y - 1) - px(img, x - 1, y + 1)) /
                            div;
    }
    return out;
}

// Fused per-pixel kernel for both classical curvatures. Evaluates the five
// stencils on the 3x3 window and combines them; arithmetic matches composing
// the stencil fields pointwise, bit for bit.
template <bool kWeighted, class Img>
ScalarField classical_impl(const Img& img, const SchemeConfig& cfg, int threads) {
    check_config(cfg);
    check_min_size(img, 3, 3, kWeighted ? "weighted_curvature_classical" : "gaussian_curvature_classical");
    const double h = cfg.pixel_size;
    const double h2 = h * h;
    const bool standard = cfg.stencil == StencilMode::Standard;
    const double xy_div = standard ? 4.0 * h2 : h2;
    const bool replicate = cfg.boundary == BoundaryPolicy::Replicate;
    const int w = img.width, ht = img.height;
    ScalarField out(w, ht);

    auto combine = [&](double c, double xp, double xm, double yp, double ym, double pp,
                       double mm, double pm, double mp) {
        const double ix = (xp - c) / h;
        const double iy = (yp - c) / h;
        const double ixx = standard ? (xp + xm - 2.0 * c) / h2 : (xp + xm - c) / h2;
        const double iyy = standard ? (yp + ym - 2.0 * c) / h2 : (yp + ym - c) / h2;
        const double ixy = (pp + mm - pm - mp) / xy_div;
        const double num = ixx * iyy - ixy * ixy;
        const double den = 1.0 + ix * ix + iy * iy;
        return kWeighted ? num / den : num / (den * den);
    };

    const int nt = resolve_threads(threads);
    (void)nt;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nt)
#endif
    for (int y = 0; y < ht; ++y) {
        const bool y_inner = y >= 1 && y + 1 < ht;
        for (int x = 0; x < w; ++x) {
            if (y_inner && x >= 1 && x + 1 < w) {
                out(x, y) = combine(px(img, x, y), px(img, x + 1, y), px(img, x - 1, y),
                                    px(img, x, y + 1), px(img, x, y - 1),
                                    px(img, x + 1, y + 1), px(img, x - 1, y - 1),
                                    px(img, x + 1, y - 1), px(img, x - 1, y + 1));
            } else if (replicate) {
                out(x, y) = combine(px(img, x, y), pxc(img, x + 1, y), pxc(img, x - 1, y),
                                    pxc(img, x, y + 1), pxc(img, x, y - 1),
                                    pxc(img, x + 1, y + 1), pxc(img, x - 1, y - 1),
                                    pxc(img, x + 1, y - 1), pxc(img, x - 1, y + 1));
            }
        }
    }
    return out;
}

}  // namespace

ScalarField gradient_x(const GrayImage& img, const SchemeConfig& cfg) { return gradient_x_impl(img, cfg); }
ScalarField gradient_x(const ScalarField& img, const SchemeConfig& cfg) { return gradient_x_impl(img, cfg); }
ScalarField gradient_y(const GrayImage& img, const SchemeConfig& cfg) { return gradient_y_impl(img, cfg); }
ScalarField gradient_y(const ScalarField& img, const SchemeConfig& cfg) { return gradient_y_impl(img, cfg); }
ScalarField second_xx(const GrayImage& img, const SchemeConfig& cfg) { return second_xx_impl(img, cfg); }
ScalarField second_xx(const ScalarField& img, const SchemeConfig& cfg) { return second_xx_impl(img, cfg); }
ScalarField second_yy(const GrayImage& img, const SchemeConfig& cfg) { return second_yy_impl(img, cfg); }
ScalarField second_yy(const ScalarField& img, const SchemeConfig& cfg) { return second_yy_impl(img, cfg); }
ScalarField second_xy(const GrayImage& img, const SchemeConfig& cfg) { return second_xy_impl(img, cfg); }
ScalarField second_xy(const ScalarField& img, const SchemeConfig& cfg) { return second_xy_impl(img, cfg); }

ScalarField gaussian_curvature_classical(const GrayImage& img, const SchemeConfig& cfg, int threads) {
    return classical_impl<false>(img, cfg, threads);
}
ScalarField gaussian_curvature_classical(const ScalarField& img, const SchemeConfig& cfg, int threads) {
    return classical_impl<false>(img, cfg, threads);
}
ScalarField weighted_curvature_classical(const GrayImage& img, const SchemeConfig& cfg, int threads) {
    return classical_impl<true>(img, cfg, threads);
}
ScalarField weighted_curvature_classical(const ScalarField& img, const SchemeConfig& cfg, int threads) {
    return classical_impl<true>(img, cfg, threads);
}

}  // namespace wgc
