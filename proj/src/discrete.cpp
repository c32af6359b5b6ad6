#include "wgcurv/discrete.hpp"

#include <cmath>
#include <numbers>

#include "wgcurv/lut.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wgc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads <= 0 ? omp_get_max_threads() : threads;
#else
    (void)threads;
    return 1;
#endif
}

// Angle sum in a fixed order so that the trigonometric and LUT paths produce
// bit-identical deficits.
template <class D, class AngleFn>
inline double angle_deficit(D d1, D d2, D d3, D d4, AngleFn&& ang) {
    double s = ang(d1, d2);
    s += ang(d2, d3);
    s += ang(d3, d4);
    s += ang(d4, d1);
    return kTwoPi - s;
}

template <class Img, class D, class AngleFn>
ScalarField deficit_field(const Img& img, BoundaryPolicy policy, int threads, AngleFn ang) {
    const int w = img.width, h = img.height;
    ScalarField out(w, h);
    const bool replicate = policy == BoundaryPolicy::Replicate;

    const int nt = resolve_threads(threads);
    (void)nt;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nt)
#endif
    for (int y = 0; y < h; ++y) {
        const bool y_inner = y >= 1 && y + 1 < h;
        for (int x = 0; x < w; ++x) {
            D d1, d2, d3, d4;
            if (y_inner && x >= 1 && x + 1 < w) {
                const D c = static_cast<D>(img(x, y));
                d1 = static_cast<D>(img(x, y + 1)) - c;
                d2 = static_cast<D>(img(x + 1, y)) - c;
                d3 = static_cast<D>(img(x, y - 1)) - c;
                d4 = static_cast<D>(img(x - 1, y)) - c;
            } else if (replicate) {
                const D c = static_cast<D>(img(x, y));
                d1 = static_cast<D>(img.at_clamped(x, y + 1)) - c;
                d2 = static_cast<D>(img.at_clamped(x + 1, y)) - c;
                d3 = static_cast<D>(img.at_clamped(x, y - 1)) - c;
                d4 = static_cast<D>(img.at_clamped(x - 1, y)) - c;
            } else {
                continue;  // InteriorOnly border stays 0
            }
            out(x, y) = angle_deficit(d1, d2, d3, d4, ang);
        }
    }
    return out;
}

}  // namespace

double corner_angle(double d_i, double d_next, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("corner_angle: h must be > 0");
    double c = (d_i * d_next) / std::sqrt((h * h + d_i * d_i) * (h * h + d_next * d_next));
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

NeighborDiffs neighbor_diffs(const GrayImage& img, int x, int y, BoundaryPolicy policy) {
    if (!img.well_formed())
        throw std::invalid_argument("neighbor_diffs: malformed image");
    if (!img.in_bounds(x, y))
        throw std::out_of_range("neighbor_diffs: pixel outside image");
    if (policy == BoundaryPolicy::InteriorOnly &&
        (x < 1 || x + 1 >= img.width || y < 1 || y + 1 >= img.height))
        throw std::out_of_range("neighbor_diffs: pixel not interior");
    const int c = img(x, y);
    return NeighborDiffs{
        static_cast<int>(img.at_clamped(x, y + 1)) - c,
        static_cast<int>(img.at_clamped(x + 1, y)) - c,
        static_cast<int>(img.at_clamped(x, y - 1)) - c,
        static_cast<int>(img.at_clamped(x - 1, y)) - c,
    };
}

ScalarField weighted_curvature_discrete(const GrayImage& img, const SchemeConfig& cfg,
                                        const AngleLut* lut, int threads) {
    check_config(cfg);
    check_min_size(img, 3, 3, "weighted_curvature_discrete");
    if (lut) {
        if (cfg.pixel_size != 1.0)
            throw std::invalid_argument(
                "weighted_curvature_discrete: LUT path requires pixel_size == 1");
        if (lut->variant() == LutVariant::Full) {
            const double* table = lut->row_block().data();
            return deficit_field<GrayImage, int>(
                img, cfg.boundary, threads, [table](int a, int b) {
                    return table[(a + AngleLut::kRange) * AngleLut::kSide + (b + AngleLut::kRange)];
                });
        }
        return deficit_field<GrayImage, int>(
            img, cfg.boundary, threads, [lut](int a, int b) { return lut->lookup(a, b); });
    }
    const double h = cfg.pixel_size;
    return deficit_field<GrayImage, int>(img, cfg.boundary, threads, [h](int a, int b) {
        return corner_angle(static_cast<double>(a), static_cast<double>(b), h);
    });
}

ScalarField weighted_curvature_discrete(const ScalarField& img, const SchemeConfig& cfg,
                                        int threads) {
    check_config(cfg);
    check_min_size(img, 3, 3, "weighted_curvature_discrete");
    const double h = cfg.pixel_size;
    return deficit_field<ScalarField, double>(img, cfg.boundary, threads,
                                              [h](double a, double b) { return corner_angle(a, b, h); });
}

}  // namespace wgc
