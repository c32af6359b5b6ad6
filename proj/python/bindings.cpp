#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "wgcurv/bench.hpp"
#include "wgcurv/classical.hpp"
#include "wgcurv/discrete.hpp"
#include "wgcurv/imgio.hpp"
#include "wgcurv/lut.hpp"
#include "wgcurv/synth.hpp"

namespace py = pybind11;

namespace {

// Arrays are (height, width); element [y, x] is the pixel at column x, row y.

wgc::GrayImage to_image(const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D uint8 array");
    wgc::GrayImage img(static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(0)));
    std::memcpy(img.data.data(), arr.data(), img.data.size());
    return img;
}

wgc::ScalarField to_field(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D float64 array");
    wgc::ScalarField f(static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(0)));
    std::memcpy(f.data.data(), arr.data(), f.data.size() * sizeof(double));
    return f;
}

py::array_t<double> from_field(const wgc::ScalarField& f) {
    py::array_t<double> arr({f.height, f.width});
    std::memcpy(arr.mutable_data(), f.data.data(), f.data.size() * sizeof(double));
    return arr;
}

py::array_t<std::uint8_t> from_image(const wgc::GrayImage& img) {
    py::array_t<std::uint8_t> arr({img.height, img.width});
    std::memcpy(arr.mutable_data(), img.data.data(), img.data.size());
    return arr;
}

wgc::SchemeConfig make_config(double h, const std::string& boundary, const std::string& stencil) {
    wgc::SchemeConfig cfg;
    cfg.pixel_size = h;
    if (boundary == "replicate")
        cfg.boundary = wgc::BoundaryPolicy::Replicate;
    else if (boundary == "interior")
        cfg.boundary = wgc::BoundaryPolicy::InteriorOnly;
    else
        throw std::invalid_argument("boundary must be 'replicate' or 'interior'");
    if (stencil == "standard")
        cfg.stencil = wgc::StencilMode::Standard;
    else if (stencil == "unnormalized")
        cfg.stencil = wgc::StencilMode::Unnormalized;
    else
        throw std::invalid_argument("stencil must be 'standard' or 'unnormalized'");
    return cfg;
}

bool is_float_array(const py::array& arr) {
    return py::isinstance<py::array_t<double>>(arr) ||
           py::isinstance<py::array_t<float>>(arr);
}

// Dispatches a stencil/curvature operation over uint8 or float input.
template <class GrayFn, class FieldFn>
py::array_t<double> dispatch(const py::array& arr, GrayFn gray_fn, FieldFn field_fn) {
    if (is_float_array(arr)) return from_field(field_fn(to_field(arr)));
    return from_field(gray_fn(to_image(arr)));
}

wgc::SyntheticSpec spec_from_args(const std::string& kind, int width, int height, bool clamp,
                                  double level, double apex_x, double apex_y, double radius,
                                  double peak, const std::string& axis, double center, double a,
                                  double b, double c) {
    if (kind == "composite") return wgc::cone_cylinder_scene(width, height);
    wgc::SyntheticSpec spec;
    spec.width = width;
    spec.height = height;
    spec.clamp = clamp;
    if (kind == "flat") {
        spec.parts = {wgc::FlatSpec{level}};
    } else if (kind == "cone") {
        spec.parts = {wgc::ConeSpec{apex_x < 0 ? (width - 1) / 2.0 : apex_x,
                                    apex_y < 0 ? (height - 1) / 2.0 : apex_y,
                                    radius > 0 ? radius : 0.4 * std::min(width, height), peak}};
    } else if (kind == "cylinder") {
        const wgc::RidgeAxis ax =
            axis == "horizontal" ? wgc::RidgeAxis::Horizontal : wgc::RidgeAxis::Vertical;
        spec.parts = {wgc::CylinderSpec{
            ax,
            center < 0 ? (ax == wgc::RidgeAxis::Vertical ? width / 2.0 : height / 2.0) : center,
            radius > 0 ? radius : 0.3 * std::min(width, height), peak}};
    } else if (kind == "ramp") {
        spec.parts = {wgc::RampSpec{a, b, c}};
    } else {
        throw std::invalid_argument("kind must be flat, cone, cylinder, ramp or composite");
    }
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weighted Gaussian curvature of grayscale images: classical finite-difference "
              "and discrete angle-deficit schemes with lookup-table acceleration.";

    // Stencils.
    m.def("gradient_x",
          [](const py::array& img, double h, const std::string& boundary, const std::string& stencil) {
              const auto cfg = make_config(h, boundary, stencil);
              return dispatch(img, [&](const wgc::GrayImage& g) { return wgc::gradient_x(g, cfg); },
                              [&](const wgc::ScalarField& f) { return wgc::gradient_x(f, cfg); });
          },
          py::arg("image"), py::arg("h") = 1.0, py::arg("boundary") = "replicate",
          py::arg("stencil") = "standard",
          "Forward difference (I(x+h,y) - I(x,y)) / h as a float64 array.");
    m.def("gradient_y",
          [](const py::array& img, double h, const std::string& boundary, const std::string& stencil) {
              const auto cfg = make_config(h, boundary, stencil);
              return dispatch(img, [&](const wgc::GrayImage& g) { return wgc::gradient_y(g, cfg); },
                              [&](const wgc::ScalarField& f) { return wgc::gradient_y(f, cfg); });
          },
          py::arg("image"), py::arg("h") = 1.0, py::arg("boundary") = "replicate",
          py::arg("stencil") = "standard");
    m.def("second_xx",
          [](const py::array& img, double h, const std::string& boundary, const std::string& stencil) {
              const auto cfg = make_config(h, boundary, stencil);
              return dispatch(img, [&](const wgc::GrayImage& g) { return wgc::second_xx(g, cfg); },
                              [&](const wgc::ScalarField& f) { return wgc::second_xx(f, cfg); });
          },
          py::arg("image"), py::arg("h") = 1.0, py::arg("boundary") = "replicate",
          py::arg("stencil") = "standard");
    m.def("second_yy",
          [](const py::array& img, double h, const std::string& boundary, const std::string& stencil) {
              const auto cfg = make_config(h, boundary, stencil);
              return dispatch(img, [&](const wgc::GrayImage& g) { return wgc::second_yy(g, cfg); },
                              [&](const wgc::ScalarField& f) { return wgc::second_yy(f, cfg); });
          },
          py::arg("image"), py::arg("h") = 1.0, py::arg("boundary") = "replicate",
          py::arg("stencil") = "standard");
    m.def("second_xy",
          [](const py::array& img, double h, const std::string& boundary, const std::string& stencil) {
              const auto cfg = make_config(h, boundary, stencil);
              return dispatch(img, [&](const wgc::GrayImage& g) { return wgc::second_xy(g, cfg); },
                              [&](const wgc::ScalarField& f) { return wgc::second_xy(f, cfg); });
          },
          py::arg("image"), py::arg("h") = 1.0, py::arg("boundary") = "replicate",
          py::arg("stencil") = "standard");

    // Curvatures.
    m.def("gaussian_curvature_classical",
          [](const py::array& img, double h, const std::string& boundary,
             const std::string& stencil, int threads) {
              const auto cfg = make_config(h, boundary, stencil);
              return dispatch(
                  img,
                  [&](const wgc::GrayImage& g) { return wgc::gaussian_curvature_classical(g, cfg, threads); },
                  [&](const wgc::ScalarField& f) { return wgc::gaussian_curvature_classical(f, cfg, threads); });
          },
          py::arg("image"), py::arg("h") = 1.0, py::arg("boundary") = "replicate",
          py::arg("stencil") = "standard", py::arg("threads") = 1,
          "Gaussian curvature K = (Ixx*Iyy - Ixy^2) / (1 + Ix^2 + Iy^2)^2.");
    m.def("weighted_curvature_classical",
          [](const py::array& img, double h, const std::string& boundary,
             const std::string& stencil, int threads) {
              const auto cfg = make_config(h, boundary, stencil);
              return dispatch(
                  img,
                  [&](const wgc::GrayImage& g) { return wgc::weighted_curvature_classical(g, cfg, threads); },
                  [&](const wgc::ScalarField& f) { return wgc::weighted_curvature_classical(f, cfg, threads); });
          },
          py::arg("image"), py::arg("h") = 1.0, py::arg("boundary") = "replicate",
          py::arg("stencil") = "standard", py::arg("threads") = 1,
          "Weighted Gaussian curvature K^w = (Ixx*Iyy - Ixy^2) / (1 + Ix^2 + Iy^2).");
    m.def("weighted_curvature_discrete",
          [](const py::array& img, double h, const std::string& boundary, const wgc::AngleLut* lut,
             int threads) {
              const auto cfg = make_config(h, boundary, "standard");
              if (is_float_array(img)) {
                  if (lut) throw std::invalid_argument("LUT path requires a uint8 image");
                  return from_field(wgc::weighted_curvature_discrete(to_field(img), cfg, threads));
              }
              return from_field(wgc::weighted_curvature_discrete(to_image(img), cfg, lut, threads));
          },
          py::arg("image"), py::arg("h") = 1.0, py::arg("boundary") = "replicate",
          py::arg("lut") = nullptr, py::arg("threads") = 1,
          "Weighted Gaussian curvature as the angle deficit 2*pi - sum of the four corner "
          "angles around each pixel.");

    m.def("corner_angle", &wgc::corner_angle, py::arg("d_i"), py::arg("d_next"), py::arg("h") = 1.0,
          "Corner angle arccos(d_i*d_next / sqrt((h^2+d_i^2)*(h^2+d_next^2))) in [0, pi].");
    m.def("neighbor_diffs",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& img,
             int x, int y, const std::string& boundary) {
              const auto policy = boundary == "interior" ? wgc::BoundaryPolicy::InteriorOnly
                                                         : wgc::BoundaryPolicy::Replicate;
              const wgc::NeighborDiffs d = wgc::neighbor_diffs(to_image(img), x, y, policy);
              return py::make_tuple(d.d1, d.d2, d.d3, d.d4);
          },
          py::arg("image"), py::arg("x"), py::arg("y"), py::arg("boundary") = "replicate",
          "Signed intensity differences (up, right, down, left) at pixel (x, y).");

    // Lookup table.
    py::class_<wgc::AngleLut>(m, "AngleLut",
                              "Precomputed corner angles over integer difference pairs "
                              "[-255, 255]^2 at unit grid step.")
        .def_static("full", &wgc::build_full_lut, "Exact 511x511 table.")
        .def_static("partial",
                    [](int threshold, const std::string& rule) {
                        const auto r = rule == "flipped" ? wgc::SaturationRule::Flipped
                                                         : wgc::SaturationRule::Limit;
                        return wgc::build_partial_lut(threshold, r);
                    },
                    py::arg("threshold"), py::arg("rule") = "limit",
                    "Threshold-truncated table; saturated pairs use the asymptotic constants.")
        .def("lookup", &wgc::AngleLut::lookup, py::arg("d_i"), py::arg("d_next"))
        .def("materialized", &wgc::AngleLut::materialized, py::arg("d_i"), py::arg("d_next"))
        .def_property_readonly("materialized_count", &wgc::AngleLut::materialized_count)
        .def_property_readonly("threshold", &wgc::AngleLut::threshold)
        .def_property_readonly("variant",
                               [](const wgc::AngleLut& lut) {
                                   return lut.variant() == wgc::LutVariant::Full ? "full" : "partial";
                               })
        .def("save", &wgc::AngleLut::save, py::arg("path"))
        .def_static("load", &wgc::AngleLut::load, py::arg("path"));

    // Synthetic images.
    m.def("synthesize",
          [](const std::string& kind, int width, int height, bool quantize, bool clamp,
             double level, double apex_x, double apex_y, double radius, double peak,
             const std::string& axis, double center, double a, double b, double c) -> py::object {
              const wgc::SyntheticSpec spec = spec_from_args(kind, width, height, clamp, level,
                                                             apex_x, apex_y, radius, peak, axis,
                                                             center, a, b, c);
              if (quantize) return from_image(wgc::generate_image(spec));
              return from_field(wgc::generate_field(spec));
          },
          py::arg("kind"), py::arg("width"), py::arg("height"), py::arg("quantize") = true,
          py::arg("clamp") = true, py::arg("level") = 128.0, py::arg("apex_x") = -1.0,
          py::arg("apex_y") = -1.0, py::arg("radius") = 0.0, py::arg("peak") = 200.0,
          py::arg("axis") = "vertical", py::arg("center") = -1.0, py::arg("a") = 1.0,
          py::arg("b") = 0.0, py::arg("c") = 0.0,
          "Render a synthetic developable surface (flat, cone, cylinder, ramp or the "
          "composite cone+cylinder scene). Returns uint8 when quantize else float64.");

    m.def("curvature_stats",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& field,
             const std::string& region,
             const std::vector<std::pair<double, double>>& mask_centers, double mask_radius) {
              const auto r = region == "full" ? wgc::StatsRegion::Full : wgc::StatsRegion::Interior;
              const wgc::CurvatureStats s =
                  mask_centers.empty()
                      ? wgc::curvature_stats(to_field(field), r)
                      : wgc::curvature_stats_masked(to_field(field), r, mask_centers, mask_radius);
              py::dict d;
              d["mean_abs"] = s.mean_abs;
              d["min"] = s.min;
              d["max"] = s.max;
              d["count"] = s.count;
              return d;
          },
          py::arg("field"), py::arg("region") = "interior",
          py::arg("mask_centers") = std::vector<std::pair<double, double>>{},
          py::arg("mask_radius") = 0.0,
          "Summary statistics (mean |v|, min, max, count) over the field region, optionally "
          "excluding pixels within mask_radius of the given (x, y) centers.");

    m.def("visualize_curvature",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& field,
             double offset, double gain) {
              wgc::VisualizationParams p;
              p.offset = offset;
              p.gain = gain;
              return from_image(wgc::visualize_curvature(to_field(field), p));
          },
          py::arg("field"), py::arg("offset") = 128.0, py::arg("gain") = 20.0,
          "Tone-map a curvature field to uint8 via round(offset + gain * value).");

    // File I/O.
    m.def("read_image", [](const std::string& path) { return from_image(wgc::read_image(path)); },
          py::arg("path"), "Read a binary PGM (P5) image.");
    m.def("write_image",
          [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& img,
             const std::string& path) { wgc::write_image(to_image(img), path); },
          py::arg("image"), py::arg("path"), "Write a binary PGM (P5) image.");
    m.def("read_field", [](const std::string& path) { return from_field(wgc::read_field(path)); },
          py::arg("path"), "Read a field dump (text size header + little-endian float64).");
    m.def("write_field",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& field,
             const std::string& path) { wgc::write_field(to_field(field), path); },
          py::arg("field"), py::arg("path"), "Write a field dump; round-trips bitwise.");
}
