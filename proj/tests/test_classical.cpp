#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "wgcurv/classical.hpp"

using namespace wgc;

namespace {

const SchemeConfig kStd{};  // h = 1, Replicate, Standard

SchemeConfig unnormalized() {
    SchemeConfig cfg;
    cfg.stencil = StencilMode::Unnormalized;
    return cfg;
}

}  // namespace

TEST_CASE("gradient_x on simple surfaces") {
    const GrayImage flat(5, 4, 77);
    for (double v : gradient_x(flat, kStd).data) CHECK(v == 0.0);

    const auto ramp = oracle::image_from(6, 5, [](int x, int) { return x; });
    const ScalarField gx = gradient_x(ramp, kStd);
    for (int y = 0; y < gx.height; ++y)
        for (int x = 0; x < gx.width; ++x)
            CHECK(gx(x, y) == (x + 1 < gx.width ? 1.0 : 0.0));  // last column replicates

    // 2x3 checkerboard: +-255 down the first column, replicated second column.
    const auto checker = oracle::image_from(2, 3, [](int x, int y) { return ((x + y) % 2) * 255; });
    const ScalarField gc = gradient_x(checker, kStd);
    for (int y = 0; y < 3; ++y) {
        CHECK(gc(0, y) == (y % 2 ? -255.0 : 255.0));
        CHECK(gc(1, y) == 0.0);
    }
}

TEST_CASE("gradient_y on simple surfaces") {
    const GrayImage flat(4, 5, 9);
    for (double v : gradient_y(flat, kStd).data) CHECK(v == 0.0);

    const auto rampy = oracle::image_from(5, 6, [](int, int y) { return y; });
    const ScalarField gy = gradient_y(rampy, kStd);
    for (int y = 0; y + 1 < gy.height; ++y)
        for (int x = 0; x < gy.width; ++x) CHECK(gy(x, y) == 1.0);

    const auto rampx = oracle::image_from(5, 6, [](int x, int) { return x; });
    for (double v : gradient_y(rampx, kStd).data) CHECK(v == 0.0);
}

TEST_CASE("second_xx stencil") {
    const GrayImage flat(5, 4, 123);
    for (double v : second_xx(flat, kStd).data) CHECK(v == 0.0);

    const auto parab = oracle::image_from(9, 3, [](int x, int) { return x * x; });
    const ScalarField sxx = second_xx(parab, kStd);
    for (int y = 0; y < 3; ++y)
        for (int x = 1; x + 1 < 9; ++x) CHECK(sxx(x, y) == 2.0);

    // Unnormalized variant keeps one center sample, so constants map to c/h^2.
    for (double v : second_xx(flat, unnormalized()).data) CHECK(v == 123.0);
    SchemeConfig half = unnormalized();
    half.pixel_size = 2.0;
    for (double v : second_xx(flat, half).data) CHECK(v == 123.0 / 4.0);
}

TEST_CASE("second_yy stencil") {
    const GrayImage flat(4, 5, 200);
    for (double v : second_yy(flat, kStd).data) CHECK(v == 0.0);

    const auto parab = oracle::image_from(3, 9, [](int, int y) { return y * y; });
    const ScalarField syy = second_yy(parab, kStd);
    for (int y = 1; y + 1 < 9; ++y)
        for (int x = 0; x < 3; ++x) CHECK(syy(x, y) == 2.0);

    const auto rampy = oracle::image_from(3, 9, [](int, int y) { return y; });
    const ScalarField lin = second_yy(rampy, kStd);
    for (int y = 1; y + 1 < 9; ++y)
        for (int x = 0; x < 3; ++x) CHECK(lin(x, y) == 0.0);
}

TEST_CASE("second_xy stencil") {
    const GrayImage flat(5, 5, 50);
    for (double v : second_xy(flat, kStd).data) CHECK(v == 0.0);

    const auto saddle = oracle::image_from(8, 8, [](int x, int y) { return x * y; });
    const ScalarField sxy = second_xy(saddle, kStd);
    for (int y = 1; y + 1 < 8; ++y)
        for (int x = 1; x + 1 < 8; ++x) CHECK(sxy(x, y) == 1.0);

    const ScalarField sxy_u = second_xy(saddle, unnormalized());
    for (int y = 1; y + 1 < 8; ++y)
        for (int x = 1; x + 1 < 8; ++x) CHECK(sxy_u(x, y) == 4.0);
}

TEST_CASE("stencil exactness on polynomials") {
    // Standard second differences are exact on quadratics and annihilate
    // linear surfaces; the mixed stencil is exact on bilinear surfaces.
    const auto quad = oracle::field_from(10, 10, [](int x, int y) { return 3.0 * x * x + 2.0 * y * y; });
    const ScalarField sxx = second_xx(quad, kStd);
    const ScalarField syy = second_yy(quad, kStd);
    for (int y = 1; y < 9; ++y)
        for (int x = 1; x < 9; ++x) {
            CHECK(sxx(x, y) == 6.0);
            CHECK(syy(x, y) == 4.0);
        }

    const auto lin = oracle::field_from(10, 10, [](int x, int y) { return 7.0 * x - 3.0 * y + 20.0; });
    for (int y = 1; y < 9; ++y)
        for (int x = 1; x < 9; ++x) {
            CHECK(second_xx(lin, kStd)(x, y) == 0.0);
            CHECK(second_yy(lin, kStd)(x, y) == 0.0);
            CHECK(second_xy(lin, kStd)(x, y) == 0.0);
        }

    const auto bilin = oracle::field_from(10, 10, [](int x, int y) { return 2.5 * x * y; });
    const ScalarField sxy = second_xy(bilin, kStd);
    for (int y = 1; y < 9; ++y)
        for (int x = 1; x < 9; ++x) CHECK(sxy(x, y) == 2.5);
}

TEST_CASE("classical curvature on flat and planar images") {
    const GrayImage flat(6, 6, 42);
    for (double v : gaussian_curvature_classical(flat, kStd).data) CHECK(v == 0.0);
    for (double v : weighted_curvature_classical(flat, kStd).data) CHECK(v == 0.0);

    const auto ramp = oracle::image_from(8, 8, [](int x, int) { return x; });
    const ScalarField k = gaussian_curvature_classical(ramp, kStd);
    const ScalarField kw = weighted_curvature_classical(ramp, kStd);
    for (int y = 1; y < 7; ++y)
        for (int x = 1; x < 7; ++x) {
            CHECK(k(x, y) == 0.0);
            CHECK(kw(x, y) == 0.0);
        }
}

TEST_CASE("classical curvature matches stencil composition on a bowl") {
    const auto bowl = oracle::field_from(11, 11, [](int x, int y) { return (x * x + y * y) / 2.0; });
    const ScalarField k = gaussian_curvature_classical(bowl, kStd);
    const ScalarField kw = weighted_curvature_classical(bowl, kStd);
    for (int y = 1; y < 10; ++y)
        for (int x = 1; x < 10; ++x) {
            CHECK(k(x, y) == oracle::classical(bowl, x, y, 1.0, true, false));
            CHECK(kw(x, y) == oracle::classical(bowl, x, y, 1.0, true, true));
        }
    // Frozen spot value: at (5,5) the forward gradients are 5.5, the second
    // differences 1, the mixed term 0, so K = 1 / (1 + 2*5.5^2)^2.
    CHECK(k(5, 5) == doctest::Approx(1.0 / 3782.25).epsilon(1e-15));
    CHECK(kw(5, 5) == doctest::Approx(1.0 / 61.5).epsilon(1e-15));
}

TEST_CASE("weighted classical curvature on a saddle") {
    const auto saddle = oracle::image_from(8, 8, [](int x, int y) { return x * y; });
    const ScalarField kw = weighted_curvature_classical(saddle, kStd);
    for (int y = 1; y < 7; ++y)
        for (int x = 1; x < 7; ++x) {
            CHECK(kw(x, y) == oracle::classical(saddle, x, y, 1.0, true, true));
            // Forward gradients give I_x = y, I_y = x, I_xy = 1, so
            // K^w = -1 / (1 + x^2 + y^2).
            CHECK(kw(x, y) == doctest::Approx(-1.0 / (1.0 + x * x + y * y)).epsilon(1e-15));
        }
}

TEST_CASE("classical schemes match the naive reference exactly on random images") {
    for (std::uint32_t seed : {1u, 2u, 3u, 4u, 5u}) {
        const GrayImage img = oracle::random_image(8, 8, seed);
        for (double h : {1.0, 0.5, 0.7}) {
            for (StencilMode mode : {StencilMode::Standard, StencilMode::Unnormalized}) {
                for (BoundaryPolicy policy : {BoundaryPolicy::Replicate, BoundaryPolicy::InteriorOnly}) {
                    SchemeConfig cfg;
                    cfg.pixel_size = h;
                    cfg.stencil = mode;
                    cfg.boundary = policy;
                    const bool standard = mode == StencilMode::Standard;
                    const ScalarField k = gaussian_curvature_classical(img, cfg);
                    const ScalarField kw = weighted_curvature_classical(img, cfg);
                    for (int y = 1; y < 7; ++y)
                        for (int x = 1; x < 7; ++x) {
                            CHECK(k(x, y) == oracle::classical(img, x, y, h, standard, false));
                            CHECK(kw(x, y) == oracle::classical(img, x, y, h, standard, true));
                        }
                    if (policy == BoundaryPolicy::Replicate) {
                        for (int x = 0; x < 8; ++x) {
                            CHECK(k(x, 0) == oracle::classical(img, x, 0, h, standard, false));
                            CHECK(kw(x, 7) == oracle::classical(img, x, 7, h, standard, true));
                        }
                    } else {
                        for (int x = 0; x < 8; ++x) {
                            CHECK(k(x, 0) == 0.0);
                            CHECK(kw(x, 7) == 0.0);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("contrast scaling of weighted classical curvature") {
    // K^w of the scaled image s*I equals
    // s^2*(Ixx*Iyy - Ixy^2) / (1 + s^2*(Ix^2 + Iy^2)) assembled from the
    // unscaled image's stencil fields.
    for (int s : {2, 3}) {
        const GrayImage img = oracle::random_image(12, 12, 77u + s, 255 / s);
        GrayImage scaled(img.width, img.height);
        for (std::size_t i = 0; i < img.data.size(); ++i)
            scaled.data[i] = static_cast<std::uint8_t>(img.data[i] * s);

        const ScalarField direct = weighted_curvature_classical(scaled, kStd);
        const ScalarField ix = gradient_x(img, kStd), iy = gradient_y(img, kStd);
        const ScalarField ixx = second_xx(img, kStd), iyy = second_yy(img, kStd);
        const ScalarField ixy = second_xy(img, kStd);
        const double s2 = static_cast<double>(s) * s;
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x) {
                const double num = ixx(x, y) * iyy(x, y) - ixy(x, y) * ixy(x, y);
                const double grad2 = ix(x, y) * ix(x, y) + iy(x, y) * iy(x, y);
                const double expected = s2 * num / (1.0 + s2 * grad2);
                CHECK(std::abs(direct(x, y) - expected) <=
                      1e-9 * std::max(1e-30, std::abs(expected)));
            }
    }
}

TEST_CASE("contrast scaling becomes stable at high gradients") {
    // The relative change |K^w(sI) - K^w(I)| / |K^w(I)| equals
    // (s^2 - 1) / (1 + s^2 * g) with g the squared gradient magnitude, so it
    // shrinks monotonically as the gradient grows.
    const int s = 2;
    const GrayImage img = oracle::random_image(16, 16, 99u, 127);
    GrayImage scaled(img.width, img.height);
    for (std::size_t i = 0; i < img.data.size(); ++i)
        scaled.data[i] = static_cast<std::uint8_t>(img.data[i] * s);
    const ScalarField base = weighted_curvature_classical(img, kStd);
    const ScalarField big = weighted_curvature_classical(scaled, kStd);
    const ScalarField ix = gradient_x(img, kStd), iy = gradient_y(img, kStd);

    double prev_rel = -1.0, prev_g = -1.0;
    std::vector<std::pair<double, double>> samples;  // (g, relative change)
    for (int y = 1; y < 15; ++y)
        for (int x = 1; x < 15; ++x) {
            if (base(x, y) == 0.0) continue;
            const double g = ix(x, y) * ix(x, y) + iy(x, y) * iy(x, y);
            const double rel = std::abs(big(x, y) - base(x, y)) / std::abs(base(x, y));
            const double closed_form = (s * s - 1.0) / (1.0 + s * s * g);
            CHECK(rel == doctest::Approx(closed_form).epsilon(1e-9));
            samples.emplace_back(g, rel);
        }
    REQUIRE(samples.size() > 50);
    std::sort(samples.begin(), samples.end());
    for (const auto& [g, rel] : samples) {
        if (prev_g >= 0.0 && g > prev_g) CHECK(rel < prev_rel + 1e-12);
        prev_g = g;
        prev_rel = rel;
    }
}

TEST_CASE("classical operations reject undersized images") {
    const GrayImage one(1, 5, 0);
    CHECK_THROWS_AS((void)gradient_x(one, kStd), std::invalid_argument);
    const GrayImage two(2, 5, 0);
    CHECK_NOTHROW((void)gradient_x(two, kStd));
    CHECK_THROWS_AS((void)second_xx(two, kStd), std::invalid_argument);
    const GrayImage short_rows(5, 2, 0);
    CHECK_THROWS_AS((void)second_yy(short_rows, kStd), std::invalid_argument);
    CHECK_THROWS_AS((void)second_xy(short_rows, kStd), std::invalid_argument);
    CHECK_THROWS_AS((void)gaussian_curvature_classical(short_rows, kStd), std::invalid_argument);
    CHECK_THROWS_AS((void)weighted_curvature_classical(two, kStd), std::invalid_argument);

    SchemeConfig bad;
    bad.pixel_size = 0.0;
    const GrayImage ok(5, 5, 0);
    CHECK_THROWS_AS((void)gradient_x(ok, bad), std::invalid_argument);
}

TEST_CASE("thread count does not change classical output") {
    const GrayImage img = oracle::random_image(64, 48, 2024u);
    const ScalarField serial = weighted_curvature_classical(img, kStd, 1);
    const ScalarField parallel = weighted_curvature_classical(img, kStd, 4);
    const ScalarField all = weighted_curvature_classical(img, kStd, 0);
    CHECK(serial.data == parallel.data);
    CHECK(serial.data == all.data);
}
