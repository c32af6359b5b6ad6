#pragma once

#include <string>

#include "wgcurv/core.hpp"
#include "wgcurv/synth.hpp"

namespace wgc {

/// Binary PGM (P5) reader. Accepts maxval in [1, 255] and '#' comments in the
/// header; rejects 16-bit files and anything that is not P5. Throws
/// std::runtime_error on unreadable, malformed or unsupported input.
GrayImage read_image(const std::string& path);

/// Binary PGM (P5) writer, maxval 255. Round-trips bit-exactly through
/// read_image.
void write_image(const GrayImage& img, const std::string& path);

/// Affine tone mapping for curvature maps: round(offset + gain * value),
/// half away from zero, clamped to [0, 255].
struct VisualizationParams {
    double offset = 128.0;
    double gain = 20.0;
};

GrayImage visualize_curvature(const ScalarField& field, const VisualizationParams& params = {});

/// Lossless field dump: one text line "<width> <height>\n" followed by
/// row-major 64-bit little-endian floats. Round-trips bitwise.
void write_field(const ScalarField& field, const std::string& path);
ScalarField read_field(const std::string& path);

/// CSV rendering of summary statistics: header "metric,value", then rows
/// mean_abs, min, max, count.
std::string stats_csv(const CurvatureStats& stats);

}  // namespace wgc
