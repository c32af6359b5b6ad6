#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "wgcurv/core.hpp"

namespace wgc {

// Synthetic developable test surfaces. Cones and cylinder ridges have zero
// Gaussian curvature away from their apex/edge singularities, so the measured
// mean |K^w| on these images is a direct readout of scheme error.

struct ConeSpec {
    double apex_x = 0.0, apex_y = 0.0;  // in pixel coordinates
    double radius = 1.0;
    double peak = 1.0;
    // I(x,y) = peak * max(0, 1 - dist((x,y), apex) / radius)
};

enum class RidgeAxis { Horizontal, Vertical };

struct CylinderSpec {
    RidgeAxis axis = RidgeAxis::Vertical;
    double center = 0.0;  // x of the ridge line for Vertical, y for Horizontal
    double radius = 1.0;
    double peak = 1.0;
    // Vertical: I(x,y) = peak * sqrt(max(0, 1 - ((x-center)/radius)^2))
};

struct RampSpec {
    double a = 0.0, b = 0.0, c = 0.0;  // I(x,y) = a*x + b*y + c
};

struct FlatSpec {
    double level = 0.0;
};

using Primitive = std::variant<ConeSpec, CylinderSpec, RampSpec, FlatSpec>;

/// A scene is the pointwise maximum of its primitives over a zero base.
struct SyntheticSpec {
    int width = 0;
    int height = 0;
    bool quantize = true;  // round to 8 bits vs. keep real-valued
    bool clamp = true;     // clamp to [0,255] vs. reject out-of-range values
    std::vector<Primitive> parts;
};

/// Real-valued render of the scene. With clamp=false, throws
/// std::invalid_argument if any value falls outside [0, 255].
ScalarField generate_field(const SyntheticSpec& spec);

/// 8-bit render (round half away from zero, then clamp to [0, 255]).
GrayImage generate_image(const SyntheticSpec& spec);

/// The standard accuracy scene: several cones of varying slope plus a
/// half-cylinder ridge over a flat base. Requires at least 64x64.
SyntheticSpec cone_cylinder_scene(int width, int height, bool quantize = true);

enum class StatsRegion { Interior, Full };

/// Summary statistics over a field region; Interior excludes the one-pixel
/// border. min/max are over signed values, mean_abs over magnitudes.
struct CurvatureStats {
    double mean_abs = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;
};

/// Throws std::invalid_argument when the region is empty (Interior on a
/// field smaller than 3x3).
CurvatureStats curvature_stats(const ScalarField& field, StatsRegion region = StatsRegion::Interior);

/// Diagnostic variant that additionally excludes every pixel within
/// mask_radius of one of the given (x, y) centers. Statistics include
/// singular pixels by default; masking the apex disks isolates the sampling
/// error of the smooth part. Throws when nothing is left to aggregate.
CurvatureStats curvature_stats_masked(const ScalarField& field, StatsRegion region,
                                      const std::vector<std::pair<double, double>>& mask_centers,
                                      double mask_radius);

/// The point singularities of a scene: the cone apexes, in pixel coordinates.
std::vector<std::pair<double, double>> singular_points(const SyntheticSpec& spec);

}  // namespace wgc
