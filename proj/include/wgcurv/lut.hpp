#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wgcurv/core.hpp"

namespace wgc {

enum class LutVariant { Full, Partial };

/// What a partial table returns for pairs where both differences meet or
/// exceed the threshold. Limit uses the asymptotic angle of the cosine law
/// (0 for same-sign differences, pi for opposite signs); Flipped swaps the
/// two constants and exists for comparison experiments only.
enum class SaturationRule { Limit, Flipped };

/// Precomputed corner angles indexed by integer neighbor differences
/// (d_i, d_next) in [-255, 255]^2 at unit grid step.
///
/// The full variant stores all 511*511 angles. The partial variant
/// materializes only the pairs with |d_i| < T or |d_next| < T, stored as two
/// dense blocks: the (2T-1) full rows with |d_i| < T, then the remaining
/// (511-(2T-1)) rows restricted to the (2T-1) columns with |d_next| < T.
/// That is 2*511*(2T-1) - (2T-1)^2 entries in total. Everything else is
/// answered by the saturation rule. Immutable once built; safe to share
/// across threads.
class AngleLut {
public:
    static constexpr int kRange = 255;       // |d| <= 255
    static constexpr int kSide = 2 * kRange + 1;  // 511

    LutVariant variant() const { return variant_; }
    int threshold() const { return threshold_; }
    SaturationRule rule() const { return rule_; }

    /// Number of stored angles (511*511 for the full variant).
    std::size_t materialized_count() const { return band_rows_.size() + band_cols_.size(); }

    /// Angle for a difference pair; throws std::out_of_range outside
    /// [-255, 255]^2. Partial tables fall back to the saturation rule.
    double lookup(int d_i, int d_next) const;

    /// True when lookup(d_i, d_next) is served from storage rather than the
    /// saturation rule. Always true for the full variant.
    bool materialized(int d_i, int d_next) const;

    /// Binary dump: 8-byte magic "WGCLUT01", u32 variant tag (0 full,
    /// 1 partial), u32 threshold, then the stored angles as row-major 64-bit
    /// little-endian floats (full row block first for partial tables).
    void save(const std::string& path) const;
    static AngleLut load(const std::string& path);

    const std::vector<double>& row_block() const { return band_rows_; }
    const std::vector<double>& col_block() const { return band_cols_; }

private:
    friend AngleLut build_full_lut();
    friend AngleLut build_partial_lut(int threshold, SaturationRule rule);

    LutVariant variant_ = LutVariant::Full;
    int threshold_ = 0;  // 0 for the full variant
    SaturationRule rule_ = SaturationRule::Limit;
    // Full: band_rows_ holds the whole 511x511 table, band_cols_ is empty.
    // Partial: band_rows_ is (2T-1) x 511, band_cols_ is (511-(2T-1)) x (2T-1).
    std::vector<double> band_rows_;
    std::vector<double> band_cols_;
};

/// Exact table over all 511*511 integer difference pairs; deterministic and
/// bit-identical across runs.
AngleLut build_full_lut();

/// Threshold-truncated table; 1 <= threshold <= 255.
AngleLut build_partial_lut(int threshold, SaturationRule rule = SaturationRule::Limit);

inline double lookup_angle(const AngleLut& lut, int d_i, int d_next) {
    return lut.lookup(d_i, d_next);
}

}  // namespace wgc
