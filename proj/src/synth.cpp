#include "wgcurv/synth.hpp"

#include <algorithm>
#include <cmath>

namespace wgc {

namespace {

void check_primitive(const Primitive& p) {
    if (const auto* cone = std::get_if<ConeSpec>(&p)) {
        if (!(cone->radius > 0.0) || !(cone->peak > 0.0))
            throw std::invalid_argument("ConeSpec: radius and peak must be positive");
    } else if (const auto* cyl = std::get_if<CylinderSpec>(&p)) {
        if (!(cyl->radius > 0.0) || !(cyl->peak > 0.0))
            throw std::invalid_argument("CylinderSpec: radius and peak must be positive");
    }
}

double eval_primitive(const Primitive& p, double x, double y) {
    if (const auto* cone = std::get_if<ConeSpec>(&p)) {
        const double r = std::hypot(x - cone->apex_x, y - cone->apex_y);
        return cone->peak * std::max(0.0, 1.0 - r / cone->radius);
    }
    if (const auto* cyl = std::get_if<CylinderSpec>(&p)) {
        const double t = (cyl->axis == RidgeAxis::Vertical ? x : y) - cyl->center;
        const double u = t / cyl->radius;
        return cyl->peak * std::sqrt(std::max(0.0, 1.0 - u * u));
    }
    if (const auto* ramp = std::get_if<RampSpec>(&p))
        return ramp->a * x + ramp->b * y + ramp->c;
    return std::get<FlatSpec>(p).level;
}

}  // namespace

ScalarField generate_field(const SyntheticSpec& spec) {
    if (spec.width < 1 || spec.height < 1)
        throw std::invalid_argument("generate_field: dimensions must be positive");
    for (const Primitive& p : spec.parts) check_primitive(p);
    ScalarField out(spec.width, spec.height);
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            double v = 0.0;
            bool first = true;
            for (const Primitive& p : spec.parts) {
                const double pv = eval_primitive(p, x, y);
                v = first ? pv : std::max(v, pv);
                first = false;
            }
            if (spec.clamp) {
                v = std::clamp(v, 0.0, 255.0);
            } else if (v < 0.0 || v > 255.0) {
                throw std::invalid_argument("generate_field: intensity outside [0, 255]");
            }
            out(x, y) = v;
        }
    }
    return out;
}

GrayImage generate_image(const SyntheticSpec& spec) {
    const ScalarField field = generate_field(spec);
    GrayImage img(field.width, field.height);
    for (std::size_t i = 0; i < field.data.size(); ++i) {
        const double r = std::round(field.data[i]);
        img.data[i] = static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
    }
    return img;
}

SyntheticSpec cone_cylinder_scene(int width, int height, bool quantize) {
    if (width < 64 || height < 64)
        throw std::invalid_argument("cone_cylinder_scene: requires at least 64x64");
    const double w = width, h = height;
    SyntheticSpec spec;
    spec.width = width;
    spec.height = height;
    spec.quantize = quantize;
    // Steep cones (slopes of roughly 13-18 intensity levels per pixel) with
    // fixed pixel radii, so the per-feature error of each scheme does not
    // depend on the image size, plus a half-cylinder ridge.
    spec.parts = {
        CylinderSpec{RidgeAxis::Vertical, 0.20 * w, 0.14 * w, 150.0},
        ConeSpec{0.55 * w, 0.30 * h, 20.0, 255.0},
        ConeSpec{0.75 * w, 0.65 * h, 14.0, 255.0},
        ConeSpec{0.45 * w, 0.72 * h, 16.0, 230.0},
        ConeSpec{0.85 * w, 0.25 * h, 12.0, 220.0},
    };
    return spec;
}

namespace {

template <class Keep>
CurvatureStats stats_over(const ScalarField& field, StatsRegion region, Keep keep) {
    if (!field.well_formed())
        throw std::invalid_argument("curvature_stats: malformed field");
    int x0 = 0, y0 = 0, x1 = field.width, y1 = field.height;
    if (region == StatsRegion::Interior) {
        x0 = 1;
        y0 = 1;
        x1 = field.width - 1;
        y1 = field.height - 1;
        if (x1 <= x0 || y1 <= y0)
            throw std::invalid_argument("curvature_stats: empty interior region");
    }
    CurvatureStats stats;
    double sum_abs = 0.0;
    double mn = 0.0, mx = 0.0;
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            if (!keep(x, y)) continue;
            const double v = field(x, y);
            if (stats.count == 0) {
                mn = v;
                mx = v;
            }
            sum_abs += std::abs(v);
            mn = std::min(mn, v);
            mx = std::max(mx, v);
            ++stats.count;
        }
    }
    if (stats.count == 0) throw std::invalid_argument("curvature_stats: empty region");
    stats.mean_abs = sum_abs / static_cast<double>(stats.count);
    stats.min = mn;
    stats.max = mx;
    return stats;
}

}  // namespace

CurvatureStats curvature_stats(const ScalarField& field, StatsRegion region) {
    return stats_over(field, region, [](int, int) { return true; });
}

CurvatureStats curvature_stats_masked(const ScalarField& field, StatsRegion region,
                                      const std::vector<std::pair<double, double>>& mask_centers,
                                      double mask_radius) {
    const double r2 = mask_radius * mask_radius;
    return stats_over(field, region, [&](int x, int y) {
        for (const auto& [cx, cy] : mask_centers) {
            const double dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy <= r2) return false;
        }
        return true;
    });
}

std::vector<std::pair<double, double>> singular_points(const SyntheticSpec& spec) {
    std::vector<std::pair<double, double>> points;
    for (const Primitive& p : spec.parts)
        if (const auto* cone = std::get_if<ConeSpec>(&p))
            points.emplace_back(cone->apex_x, cone->apex_y);
    return points;
}

}  // namespace wgc
