#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wgcurv/core.hpp"

namespace wgc {

enum class SchemePath {
    ClassicalK,
    ClassicalKw,
    DiscreteTrig,
    DiscreteLutFull,
    DiscreteLutPartial,
};

std::string scheme_path_name(SchemePath path);

struct BenchConfig {
    SchemePath path = SchemePath::DiscreteLutFull;
    int threads = 0;             // <= 0: all available cores
    int partial_threshold = 31;  // used by DiscreteLutPartial
};

struct BenchRow {
    std::string label;
    SchemePath path;
    int threads = 0;
    int width = 0, height = 0;
    int repetitions = 0;
    double median_ms = 0.0;
    double mpix_per_s = 0.0;
    std::uint64_t field_hash = 0;  // FNV-1a over the output bytes
};

struct AccuracyBlock {
    double classical_mean_abs = 0.0;  // interior mean |K^w|, classical scheme
    double discrete_mean_abs = 0.0;   // interior mean |K^w|, angle-deficit scheme
    double ratio = 0.0;               // classical / discrete
};

struct BenchReport {
    std::vector<BenchRow> rows;
    AccuracyBlock accuracy;
};

/// FNV-1a over the field's raw bytes; used to assert that timed runs produce
/// exactly the same output as untimed computation.
std::uint64_t field_hash(const ScalarField& field);

/// Times each configuration on the image: one untimed warm-up pass, then
/// `repetitions` timed passes (median reported). LUTs are built outside the
/// timed section. The accuracy block compares interior mean |K^w| of the
/// classical and discrete schemes on the same image. Requires
/// repetitions >= 3 and an image of at least 3x3.
BenchReport run_bench(const GrayImage& img, const std::vector<BenchConfig>& configs,
                      int repetitions);

/// The standard comparison set: classical K^w, trig path, full LUT,
/// partial LUT (T=31).
std::vector<BenchConfig> default_bench_configs(int threads = 0);

std::string report_csv(const BenchReport& report);
std::string report_text(const BenchReport& report);

}  // namespace wgc
