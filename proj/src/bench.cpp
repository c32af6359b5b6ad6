#include "wgcurv/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "wgcurv/classical.hpp"
#include "wgcurv/discrete.hpp"
#include "wgcurv/lut.hpp"
#include "wgcurv/synth.hpp"

namespace wgc {

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::string scheme_path_name(SchemePath path) {
    switch (path) {
        case SchemePath::ClassicalK: return "classical-k";
        case SchemePath::ClassicalKw: return "classical-kw";
        case SchemePath::DiscreteTrig: return "discrete-trig";
        case SchemePath::DiscreteLutFull: return "discrete-lut-full";
        case SchemePath::DiscreteLutPartial: return "discrete-lut-partial";
    }
    return "unknown";
}

std::uint64_t field_hash(const ScalarField& field) {
    std::uint64_t hash = 14695981039346656037ull;
    const unsigned char* bytes = reinterpret_cast<const unsigned char*>(field.data.data());
    const std::size_t n = field.data.size() * sizeof(double);
    for (std::size_t i = 0; i < n; ++i) {
        hash ^= bytes[i];
        hash *= 1099511628211ull;
    }
    return hash;
}

std::vector<BenchConfig> default_bench_configs(int threads) {
    return {
        {SchemePath::ClassicalKw, threads, 31},
        {SchemePath::DiscreteTrig, threads, 31},
        {SchemePath::DiscreteLutFull, threads, 31},
        {SchemePath::DiscreteLutPartial, threads, 31},
    };
}

BenchReport run_bench(const GrayImage& img, const std::vector<BenchConfig>& configs,
                      int repetitions) {
    if (repetitions < 3)
        throw std::invalid_argument("run_bench: repetitions must be >= 3");
    check_min_size(img, 3, 3, "run_bench");

    // Tables are precomputation, built outside the timed section.
    std::unique_ptr<AngleLut> full_lut, partial_lut;
    for (const BenchConfig& c : configs) {
        if (c.path == SchemePath::DiscreteLutFull && !full_lut)
            full_lut = std::make_unique<AngleLut>(build_full_lut());
        if (c.path == SchemePath::DiscreteLutPartial &&
            (!partial_lut || partial_lut->threshold() != c.partial_threshold))
            partial_lut = std::make_unique<AngleLut>(build_partial_lut(c.partial_threshold));
    }

    BenchReport report;
    const SchemeConfig scheme_cfg{};  // h = 1, Replicate, Standard
    for (const BenchConfig& c : configs) {
        auto run = [&]() -> ScalarField {
            switch (c.path) {
                case SchemePath::ClassicalK:
                    return gaussian_curvature_classical(img, scheme_cfg, c.threads);
                case SchemePath::ClassicalKw:
                    return weighted_curvature_classical(img, scheme_cfg, c.threads);
                case SchemePath::DiscreteTrig:
                    return weighted_curvature_discrete(img, scheme_cfg, nullptr, c.threads);
                case SchemePath::DiscreteLutFull:
                    return weighted_curvature_discrete(img, scheme_cfg, full_lut.get(), c.threads);
                case SchemePath::DiscreteLutPartial:
                    return weighted_curvature_discrete(img, scheme_cfg, partial_lut.get(), c.threads);
            }
            throw std::invalid_argument("run_bench: unknown scheme path");
        };

        const ScalarField warm = run();  // warm-up pass, excluded from timing
        const std::uint64_t hash = field_hash(warm);

        std::vector<double> times_ms;
        times_ms.reserve(repetitions);
        for (int r = 0; r < repetitions; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            const ScalarField out = run();
            const auto t1 = std::chrono::steady_clock::now();
            times_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            if (field_hash(out) != hash)
                throw std::runtime_error("run_bench: nondeterministic output");
        }

        BenchRow row;
        row.label = scheme_path_name(c.path);
        if (c.path == SchemePath::DiscreteLutPartial)
            row.label += ":" + std::to_string(c.partial_threshold);
        row.path = c.path;
        row.threads = c.threads;
        row.width = img.width;
        row.height = img.height;
        row.repetitions = repetitions;
        row.median_ms = median(times_ms);
        row.mpix_per_s =
            (static_cast<double>(img.width) * img.height / 1e6) / (row.median_ms / 1e3);
        row.field_hash = hash;
        report.rows.push_back(std::move(row));
    }

    const ScalarField kw_classical = weighted_curvature_classical(img, scheme_cfg, 0);
    const ScalarField kw_discrete = weighted_curvature_discrete(img, scheme_cfg, nullptr, 0);
    const CurvatureStats sc = curvature_stats(kw_classical, StatsRegion::Interior);
    const CurvatureStats sd = curvature_stats(kw_discrete, StatsRegion::Interior);
    report.accuracy.classical_mean_abs = sc.mean_abs;
    report.accuracy.discrete_mean_abs = sd.mean_abs;
    report.accuracy.ratio = sc.mean_abs / sd.mean_abs;
    return report;
}

std::string report_csv(const BenchReport& report) {
    std::ostringstream out;
    out.precision(17);
    out << "scheme,threads,width,height,repetitions,median_ms,mpix_per_s,field_hash\n";
    for (const BenchRow& r : report.rows)
        out << r.label << "," << r.threads << "," << r.width << "," << r.height << ","
            << r.repetitions << "," << r.median_ms << "," << r.mpix_per_s << "," << r.field_hash
            << "\n";
    out << "\nmetric,value\n";
    out << "classical_mean_abs," << report.accuracy.classical_mean_abs << "\n";
    out << "discrete_mean_abs," << report.accuracy.discrete_mean_abs << "\n";
    out << "ratio," << report.accuracy.ratio << "\n";
    return out.str();
}

std::string report_text(const BenchReport& report) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-24s %8s %6s %6s %5s %12s %12s\n", "scheme", "threads",
                  "width", "height", "reps", "median_ms", "mpix/s");
    out << line;
    for (const BenchRow& r : report.rows) {
        std::snprintf(line, sizeof(line), "%-24s %8d %6d %6d %5d %12.3f %12.2f\n",
                      r.label.c_str(), r.threads, r.width, r.height, r.repetitions, r.median_ms,
                      r.mpix_per_s);
        out << line;
    }
    std::snprintf(line, sizeof(line),
                  "\ninterior mean |K^w|: classical %.6g, discrete %.6g, ratio %.3g\n",
                  report.accuracy.classical_mean_abs, report.accuracy.discrete_mean_abs,
                  report.accuracy.ratio);
    out << line;
    return out.str();
}

}  // namespace wgc
