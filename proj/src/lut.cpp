#include "wgcurv/lut.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <numbers>

#include "wgcurv/discrete.hpp"

namespace wgc {

namespace {

constexpr char kMagic[8] = {'W', 'G', 'C', 'L', 'U', 'T', '0', '1'};
constexpr int kR = AngleLut::kRange;  // 255
constexpr int kS = AngleLut::kSide;   // 511

void put_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw std::runtime_error("LUT file: truncated header");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

void put_f64(std::ostream& out, double d) {
    const std::uint64_t v = std::bit_cast<std::uint64_t>(d);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw std::runtime_error("LUT file: truncated payload");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return std::bit_cast<double>(v);
}

void check_range(int d_i, int d_next) {
    if (d_i < -kR || d_i > kR || d_next < -kR || d_next > kR)
        throw std::out_of_range("AngleLut: difference outside [-255, 255]");
}

// Index of row a (|a| >= T) within the column block, rows ordered
// a = -255..-T, then T..255.
inline int col_block_row(int a, int threshold) {
    return a < 0 ? a + kR : a + kR - (2 * threshold - 1);
}

}  // namespace

double AngleLut::lookup(int d_i, int d_next) const {
    check_range(d_i, d_next);
    if (variant_ == LutVariant::Full)
        return band_rows_[static_cast<std::size_t>(d_i + kR) * kS + (d_next + kR)];
    const int t = threshold_;
    if (d_i > -t && d_i < t)
        return band_rows_[static_cast<std::size_t>(d_i + t - 1) * kS + (d_next + kR)];
    if (d_next > -t && d_next < t)
        return band_cols_[static_cast<std::size_t>(col_block_row(d_i, t)) * (2 * t - 1) +
                          (d_next + t - 1)];
    // Both differences saturate the threshold; neither can be zero here.
    const bool same_sign = (d_i > 0) == (d_next > 0);
    if (rule_ == SaturationRule::Limit)
        return same_sign ? 0.0 : std::numbers::pi;
    return same_sign ? std::numbers::pi : 0.0;
}

bool AngleLut::materialized(int d_i, int d_next) const {
    check_range(d_i, d_next);
    if (variant_ == LutVariant::Full) return true;
    return (d_i > -threshold_ && d_i < threshold_) ||
           (d_next > -threshold_ && d_next < threshold_);
}

AngleLut build_full_lut() {
    AngleLut lut;
    lut.variant_ = LutVariant::Full;
    lut.threshold_ = 0;
    lut.band_rows_.resize(static_cast<std::size_t>(kS) * kS);
    for (int a = -kR; a <= kR; ++a)
        for (int b = -kR; b <= kR; ++b)
            lut.band_rows_[static_cast<std::size_t>(a + kR) * kS + (b + kR)] =
                corner_angle(a, b, 1.0);
    return lut;
}

AngleLut build_partial_lut(int threshold, SaturationRule rule) {
    if (threshold < 1 || threshold > kR)
        throw std::invalid_argument("build_partial_lut: threshold must be in [1, 255]");
    AngleLut lut;
    lut.variant_ = LutVariant::Partial;
    lut.threshold_ = threshold;
    lut.rule_ = rule;
    const int band = 2 * threshold - 1;
    lut.band_rows_.resize(static_cast<std::size_t>(band) * kS);
    for (int a = -(threshold - 1); a <= threshold - 1; ++a)
        for (int b = -kR; b <= kR; ++b)
            lut.band_rows_[static_cast<std::size_t>(a + threshold - 1) * kS + (b + kR)] =
                corner_angle(a, b, 1.0);
    lut.band_cols_.resize(static_cast<std::size_t>(kS - band) * band);
    for (int a = -kR; a <= kR; ++a) {
        if (a > -threshold && a < threshold) continue;
        for (int b = -(threshold - 1); b <= threshold - 1; ++b)
            lut.band_cols_[static_cast<std::size_t>(col_block_row(a, threshold)) * band +
                           (b + threshold - 1)] = corner_angle(a, b, 1.0);
    }
    return lut;
}

void AngleLut::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("AngleLut::save: cannot open " + path);
    out.write(kMagic, sizeof(kMagic));
    put_u32(out, variant_ == LutVariant::Full ? 0u : 1u);
    put_u32(out, static_cast<std::uint32_t>(threshold_));
    for (double d : band_rows_) put_f64(out, d);
    for (double d : band_cols_) put_f64(out, d);
    if (!out) throw std::runtime_error("AngleLut::save: write failed for " + path);
}

AngleLut AngleLut::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("AngleLut::load: cannot open " + path);
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("AngleLut::load: bad magic");
    const std::uint32_t tag = get_u32(in);
    const std::uint32_t threshold = get_u32(in);
    AngleLut lut;
    if (tag == 0) {
        if (threshold != 0) throw std::runtime_error("AngleLut::load: full table with threshold");
        lut.variant_ = LutVariant::Full;
        lut.band_rows_.resize(static_cast<std::size_t>(kS) * kS);
    } else if (tag == 1) {
        if (threshold < 1 || threshold > static_cast<std::uint32_t>(kR))
            throw std::runtime_error("AngleLut::load: bad threshold");
        lut.variant_ = LutVariant::Partial;
        lut.threshold_ = static_cast<int>(threshold);
        const int band = 2 * lut.threshold_ - 1;
        lut.band_rows_.resize(static_cast<std::size_t>(band) * kS);
        lut.band_cols_.resize(static_cast<std::size_t>(kS - band) * band);
    } else {
        throw std::runtime_error("AngleLut::load: unknown variant tag");
    }
    for (double& d : lut.band_rows_) d = get_f64(in);
    for (double& d : lut.band_cols_) d = get_f64(in);
    if (in.get() != std::char_traits<char>::eof())
        throw std::runtime_error("AngleLut::load: trailing bytes");
    return lut;
}

}  // namespace wgc
