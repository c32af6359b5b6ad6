#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wgc {

/// How stencil and neighbor reads behave at the image border.
enum class BoundaryPolicy {
    Replicate,     ///< clamp-to-edge: out-of-range neighbors read the nearest valid pixel
    InteriorOnly,  ///< evaluate only where the stencil fits; remaining pixels are 0
};

/// Flavor of the second-order finite-difference stencils.
enum class StencilMode {
    Standard,      ///< central second differences (factor 2 center tap, 1/(4h^2) mixed term)
    Unnormalized,  ///< variant that subtracts the center sample once and divides the mixed term by h^2
};

/// 8-bit grayscale image, row-major. x is the column index, y the row index.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0) : width(w), height(h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("GrayImage: dimensions must be positive");
        data.assign(static_cast<std::size_t>(w) * h, fill);
    }

    std::uint8_t operator()(int x, int y) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& operator()(int x, int y) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }
    /// Clamp-to-edge read; total for any (x, y).
    std::uint8_t at_clamped(int x, int y) const {
        x = x < 0 ? 0 : (x >= width ? width - 1 : x);
        y = y < 0 ? 0 : (y >= height ? height - 1 : y);
        return (*this)(x, y);
    }
    bool well_formed() const {
        return width >= 1 && height >= 1 &&
               data.size() == static_cast<std::size_t>(width) * height;
    }
};

/// Double-precision grid holding curvature maps and derivative fields.
struct ScalarField {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    ScalarField() = default;
    ScalarField(int w, int h, double fill = 0.0) : width(w), height(h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("ScalarField: dimensions must be positive");
        data.assign(static_cast<std::size_t>(w) * h, fill);
    }

    double operator()(int x, int y) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    double& operator()(int x, int y) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }
    double at_clamped(int x, int y) const {
        x = x < 0 ? 0 : (x >= width ? width - 1 : x);
        y = y < 0 ? 0 : (y >= height ? height - 1 : y);
        return (*this)(x, y);
    }
    bool well_formed() const {
        return width >= 1 && height >= 1 &&
               data.size() == static_cast<std::size_t>(width) * height;
    }
};

/// Signed intensity differences to the four axis neighbors of a pixel,
/// in the order up (+y), right (+x), down (-y), left (-x).
struct NeighborDiffs {
    int d1 = 0;  ///< I(x, y+1) - I(x, y)
    int d2 = 0;  ///< I(x+1, y) - I(x, y)
    int d3 = 0;  ///< I(x, y-1) - I(x, y)
    int d4 = 0;  ///< I(x-1, y) - I(x, y)
};

/// Shared knobs for every curvature computation.
struct SchemeConfig {
    double pixel_size = 1.0;  ///< grid spacing h, must be > 0
    BoundaryPolicy boundary = BoundaryPolicy::Replicate;
    StencilMode stencil = StencilMode::Standard;
};

inline void check_config(const SchemeConfig& cfg) {
    if (!(cfg.pixel_size > 0.0))
        throw std::invalid_argument("SchemeConfig: pixel_size must be > 0");
}

inline void check_min_width(const GrayImage& img, int min_w, const char* op) {
    if (!img.well_formed())
        throw std::invalid_argument(std::string(op) + ": malformed image");
    if (img.width < min_w)
        throw std::invalid_argument(std::string(op) + ": image width too small");
}

inline void check_min_height(const GrayImage& img, int min_h, const char* op) {
    if (!img.well_formed())
        throw std::invalid_argument(std::string(op) + ": malformed image");
    if (img.height < min_h)
        throw std::invalid_argument(std::string(op) + ": image height too small");
}

inline void check_min_size(const GrayImage& img, int min_w, int min_h, const char* op) {
    check_min_width(img, min_w, op);
    check_min_height(img, min_h, op);
}

inline void check_min_width(const ScalarField& img, int min_w, const char* op) {
    if (!img.well_formed())
        throw std::invalid_argument(std::string(op) + ": malformed field");
    if (img.width < min_w)
        throw std::invalid_argument(std::string(op) + ": field width too small");
}

inline void check_min_height(const ScalarField& img, int min_h, const char* op) {
    if (!img.well_formed())
        throw std::invalid_argument(std::string(op) + ": malformed field");
    if (img.height < min_h)
        throw std::invalid_argument(std::string(op) + ": field height too small");
}

inline void check_min_size(const ScalarField& img, int min_w, int min_h, const char* op) {
    check_min_width(img, min_w, op);
    check_min_height(img, min_h, op);
}

}  // namespace wgc
