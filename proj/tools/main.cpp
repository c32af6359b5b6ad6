// wgc: weighted Gaussian curvature of grayscale images.
//
// Subcommands: compute, compare, synth, lut-dump, bench. See --help.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "wgcurv/bench.hpp"
#include "wgcurv/classical.hpp"
#include "wgcurv/discrete.hpp"
#include "wgcurv/imgio.hpp"
#include "wgcurv/lut.hpp"
#include "wgcurv/synth.hpp"

namespace {

constexpr const char* kSyntheticToken = "synthetic-cone-cylinder";

struct LutChoice {
    enum class Kind { Auto, None, Full, Partial } kind = Kind::Auto;
    int threshold = 31;
};

LutChoice parse_lut_choice(const std::string& text) {
    LutChoice choice;
    if (text == "auto") {
        choice.kind = LutChoice::Kind::Auto;
    } else if (text == "none") {
        choice.kind = LutChoice::Kind::None;
    } else if (text == "full") {
        choice.kind = LutChoice::Kind::Full;
    } else if (text.rfind("partial:", 0) == 0) {
        choice.kind = LutChoice::Kind::Partial;
        choice.threshold = std::stoi(text.substr(8));
    } else {
        throw CLI::ValidationError("--lut", "expected none, full or partial:T");
    }
    return choice;
}

std::pair<int, int> parse_size(const std::string& text) {
    const auto sep = text.find('x');
    if (sep == std::string::npos)
        throw CLI::ValidationError("--size", "expected WIDTHxHEIGHT, e.g. 512x512");
    try {
        const int w = std::stoi(text.substr(0, sep));
        const int h = std::stoi(text.substr(sep + 1));
        if (w < 1 || h < 1) throw std::invalid_argument("nonpositive");
        return {w, h};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--size", "expected WIDTHxHEIGHT, e.g. 512x512");
    }
}

wgc::SchemeConfig make_config(double h, const std::string& boundary, const std::string& stencil) {
    wgc::SchemeConfig cfg;
    cfg.pixel_size = h;
    if (boundary == "replicate")
        cfg.boundary = wgc::BoundaryPolicy::Replicate;
    else if (boundary == "interior")
        cfg.boundary = wgc::BoundaryPolicy::InteriorOnly;
    else
        throw CLI::ValidationError("--boundary", "expected replicate or interior");
    if (stencil == "standard")
        cfg.stencil = wgc::StencilMode::Standard;
    else if (stencil == "unnormalized")
        cfg.stencil = wgc::StencilMode::Unnormalized;
    else
        throw CLI::ValidationError("--stencil", "expected standard or unnormalized");
    return cfg;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
    if (!out.flush()) throw std::runtime_error("write failed for " + path);
}

// ---- synth -----------------------------------------------------------------

struct SynthOptions {
    std::string kind = "composite";
    std::string size;
    std::string config_path;
    double level = 128.0;
    std::vector<double> apex;  // x,y
    double radius = 0.0;       // 0 = derive from size
    double peak = 200.0;
    std::string axis = "vertical";
    double center = -1.0;  // <0 = derive from size
    double a = 1.0, b = 0.0, c = 0.0;
    std::string output;
    std::string field_output;
};

std::map<std::string, std::string> parse_key_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
    return kv;
}

void apply_config_file(SynthOptions& opt) {
    if (opt.config_path.empty()) return;
    const auto kv = parse_key_value_file(opt.config_path);
    auto get = [&](const char* key) -> std::optional<std::string> {
        const auto it = kv.find(key);
        return it == kv.end() ? std::nullopt : std::optional<std::string>(it->second);
    };
    if (auto v = get("kind")) opt.kind = *v;
    if (auto v = get("size")) opt.size = *v;
    if (auto w = get("width")) {
        if (auto h = get("height")) opt.size = *w + "x" + *h;
    }
    if (auto v = get("level")) opt.level = std::stod(*v);
    if (auto v = get("apex_x")) opt.apex = {std::stod(*v), opt.apex.size() > 1 ? opt.apex[1] : 0.0};
    if (auto v = get("apex_y")) {
        if (opt.apex.empty()) opt.apex = {0.0, 0.0};
        opt.apex.resize(2);
        opt.apex[1] = std::stod(*v);
    }
    if (auto v = get("radius")) opt.radius = std::stod(*v);
    if (auto v = get("peak")) opt.peak = std::stod(*v);
    if (auto v = get("axis")) opt.axis = *v;
    if (auto v = get("center")) opt.center = std::stod(*v);
    if (auto v = get("a")) opt.a = std::stod(*v);
    if (auto v = get("b")) opt.b = std::stod(*v);
    if (auto v = get("c")) opt.c = std::stod(*v);
}

wgc::SyntheticSpec build_spec(const SynthOptions& opt) {
    if (opt.size.empty())
        throw CLI::ValidationError("--size", "size is required (flag or config file)");
    const auto [w, h] = parse_size(opt.size);
    if (opt.kind == "composite") return wgc::cone_cylinder_scene(w, h);

    wgc::SyntheticSpec spec;
    spec.width = w;
    spec.height = h;
    if (opt.kind == "flat") {
        spec.parts = {wgc::FlatSpec{opt.level}};
    } else if (opt.kind == "cone") {
        wgc::ConeSpec cone;
        cone.apex_x = opt.apex.size() == 2 ? opt.apex[0] : (w - 1) / 2.0;
        cone.apex_y = opt.apex.size() == 2 ? opt.apex[1] : (h - 1) / 2.0;
        cone.radius = opt.radius > 0.0 ? opt.radius : 0.4 * std::min(w, h);
        cone.peak = opt.peak;
        spec.parts = {cone};
    } else if (opt.kind == "cylinder") {
        wgc::CylinderSpec cyl;
        cyl.axis = opt.axis == "horizontal" ? wgc::RidgeAxis::Horizontal : wgc::RidgeAxis::Vertical;
        cyl.center = opt.center >= 0.0
                         ? opt.center
                         : (cyl.axis == wgc::RidgeAxis::Vertical ? w / 2.0 : h / 2.0);
        cyl.radius = opt.radius > 0.0 ? opt.radius : 0.3 * std::min(w, h);
        cyl.peak = opt.peak;
        spec.parts = {cyl};
    } else if (opt.kind == "ramp") {
        spec.parts = {wgc::RampSpec{opt.a, opt.b, opt.c}};
    } else {
        throw CLI::ValidationError("--kind", "expected flat, cone, cylinder, ramp or composite");
    }
    return spec;
}

// ---- command bodies --------------------------------------------------------

int run_compute(const std::string& input, const std::string& output, const std::string& scheme,
                const std::string& lut_text, double h, const std::string& boundary,
                const std::string& stencil, int threads, const std::string& vis_path,
                double vis_offset, double vis_gain) {
    const wgc::SchemeConfig cfg = make_config(h, boundary, stencil);
    const LutChoice lut_choice = parse_lut_choice(lut_text);
    const wgc::GrayImage img = wgc::read_image(input);

    wgc::ScalarField field;
    if (scheme == "classical-k" || scheme == "classical-kw") {
        if (lut_choice.kind == LutChoice::Kind::Full || lut_choice.kind == LutChoice::Kind::Partial)
            throw CLI::ValidationError("--lut", "classical schemes do not use a lookup table");
        field = scheme == "classical-k" ? wgc::gaussian_curvature_classical(img, cfg, threads)
                                        : wgc::weighted_curvature_classical(img, cfg, threads);
    } else if (scheme == "discrete-kw") {
        std::unique_ptr<wgc::AngleLut> lut;
        switch (lut_choice.kind) {
            case LutChoice::Kind::None:
                break;
            case LutChoice::Kind::Auto:
                if (cfg.pixel_size == 1.0)
                    lut = std::make_unique<wgc::AngleLut>(wgc::build_full_lut());
                break;
            case LutChoice::Kind::Full:
                lut = std::make_unique<wgc::AngleLut>(wgc::build_full_lut());
                break;
            case LutChoice::Kind::Partial:
                lut = std::make_unique<wgc::AngleLut>(wgc::build_partial_lut(lut_choice.threshold));
                break;
        }
        field = wgc::weighted_curvature_discrete(img, cfg, lut.get(), threads);
    } else {
        throw CLI::ValidationError("--scheme", "expected classical-k, classical-kw or discrete-kw");
    }

    wgc::write_field(field, output);
    if (!vis_path.empty()) {
        wgc::VisualizationParams params;
        params.offset = vis_offset;
        params.gain = vis_gain;
        wgc::write_image(wgc::visualize_curvature(field, params), vis_path);
    }
    return 0;
}

int run_compare(const std::string& input, const std::string& csv_path, const std::string& region,
                const std::string& size_text, bool unquantized, double h,
                const std::string& stencil, int threads, const std::string& save_classical,
                const std::string& save_discrete, double mask_apexes) {
    const wgc::SchemeConfig cfg = make_config(h, "replicate", stencil);
    if (region != "full" && region != "interior")
        throw CLI::ValidationError("--region", "expected interior or full");
    const wgc::StatsRegion stats_region =
        region == "full" ? wgc::StatsRegion::Full : wgc::StatsRegion::Interior;

    wgc::ScalarField kw_classical, kw_discrete;
    std::vector<std::pair<double, double>> apexes;
    if (input == kSyntheticToken) {
        const auto [w, hh] = parse_size(size_text);
        const wgc::SyntheticSpec spec = wgc::cone_cylinder_scene(w, hh, !unquantized);
        apexes = wgc::singular_points(spec);
        if (unquantized) {
            const wgc::ScalarField real = wgc::generate_field(spec);
            kw_classical = wgc::weighted_curvature_classical(real, cfg, threads);
            kw_discrete = wgc::weighted_curvature_discrete(real, cfg, threads);
        } else {
            const wgc::GrayImage img = wgc::generate_image(spec);
            kw_classical = wgc::weighted_curvature_classical(img, cfg, threads);
            kw_discrete = wgc::weighted_curvature_discrete(img, cfg, nullptr, threads);
        }
    } else {
        if (unquantized)
            throw CLI::ValidationError("--unquantized",
                                       "only valid with the synthetic-cone-cylinder input");
        if (mask_apexes > 0.0)
            throw CLI::ValidationError("--mask-apexes",
                                       "only valid with the synthetic-cone-cylinder input");
        const wgc::GrayImage img = wgc::read_image(input);
        kw_classical = wgc::weighted_curvature_classical(img, cfg, threads);
        kw_discrete = wgc::weighted_curvature_discrete(img, cfg, nullptr, threads);
    }

    if (!save_classical.empty()) wgc::write_field(kw_classical, save_classical);
    if (!save_discrete.empty()) wgc::write_field(kw_discrete, save_discrete);

    auto mean_abs = [&](const wgc::ScalarField& f) {
        return mask_apexes > 0.0
                   ? wgc::curvature_stats_masked(f, stats_region, apexes, mask_apexes).mean_abs
                   : wgc::curvature_stats(f, stats_region).mean_abs;
    };
    const double mc = mean_abs(kw_classical);
    const double md = mean_abs(kw_discrete);
    std::ostringstream csv;
    csv.precision(17);
    csv << "metric,value\n";
    csv << "classical_mean_abs," << mc << "\n";
    csv << "discrete_mean_abs," << md << "\n";
    csv << "ratio," << mc / md << "\n";
    write_text(csv_path, csv.str());
    return 0;
}

int run_synth(const SynthOptions& opt_in) {
    SynthOptions opt = opt_in;
    apply_config_file(opt);
    const wgc::SyntheticSpec spec = build_spec(opt);
    wgc::write_image(wgc::generate_image(spec), opt.output);
    if (!opt.field_output.empty()) wgc::write_field(wgc::generate_field(spec), opt.field_output);
    return 0;
}

int run_lut_dump(const std::string& variant_text, const std::string& output) {
    LutChoice choice = parse_lut_choice(variant_text == "auto" ? "full" : variant_text);
    if (choice.kind == LutChoice::Kind::None)
        throw CLI::ValidationError("--variant", "expected full or partial:T");
    const wgc::AngleLut lut = choice.kind == LutChoice::Kind::Partial
                                  ? wgc::build_partial_lut(choice.threshold)
                                  : wgc::build_full_lut();
    lut.save(output);
    return 0;
}

int run_bench_cmd(const std::string& input, const std::string& size_text, int reps, int threads,
                  const std::string& csv_path) {
    wgc::GrayImage img;
    if (input.empty() || input == kSyntheticToken) {
        const auto [w, h] = parse_size(size_text);
        img = wgc::generate_image(wgc::cone_cylinder_scene(w, h));
    } else {
        img = wgc::read_image(input);
    }
    const wgc::BenchReport report = wgc::run_bench(img, wgc::default_bench_configs(threads), reps);
    std::cout << wgc::report_text(report);
    if (!csv_path.empty()) write_text(csv_path, wgc::report_csv(report));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Gaussian curvature of grayscale images"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Compute a curvature map of a PGM image");
    std::string in_path, out_path, scheme = "discrete-kw", lut_text = "auto";
    std::string boundary = "replicate", stencil = "standard", vis_path;
    double h = 1.0, vis_offset = 128.0, vis_gain = 20.0;
    int threads = 0;
    compute->add_option("input", in_path, "input image (binary PGM)")->required();
    compute->add_option("output", out_path, "output field dump (.f64)")->required();
    compute->add_option("--scheme", scheme, "classical-k | classical-kw | discrete-kw")
        ->default_str("discrete-kw");
    compute->add_option("--lut", lut_text, "none | full | partial:T (discrete scheme only)")
        ->default_str("auto");
    compute->add_option("--pixel-size", h, "grid step h")->default_val(1.0);
    compute->add_option("--boundary", boundary, "replicate | interior")->default_str("replicate");
    compute->add_option("--stencil", stencil, "standard | unnormalized")->default_str("standard");
    compute->add_option("--threads", threads, "worker threads (0 = all cores)")->default_val(0);
    compute->add_option("--vis", vis_path, "also write a visualization PGM");
    compute->add_option("--vis-offset", vis_offset, "visualization offset")->default_val(128.0);
    compute->add_option("--vis-gain", vis_gain, "visualization gain")->default_val(20.0);

    // compare
    auto* compare = app.add_subcommand(
        "compare", "Run both K^w schemes on one input and report mean |K^w| and their ratio");
    std::string cmp_input, cmp_csv, cmp_region = "interior", cmp_size = "512x512";
    std::string cmp_stencil = "standard", cmp_save_classical, cmp_save_discrete;
    double cmp_h = 1.0, cmp_mask_apexes = 0.0;
    int cmp_threads = 0;
    bool cmp_unquantized = false;
    compare->add_option("input", cmp_input, "input PGM path or 'synthetic-cone-cylinder'")
        ->required();
    compare->add_option("--csv", cmp_csv, "CSV output path (default: stdout)");
    compare->add_option("--region", cmp_region, "interior | full")->default_str("interior");
    compare->add_option("--size", cmp_size, "synthetic input size WxH")->default_str("512x512");
    compare->add_flag("--unquantized", cmp_unquantized,
                      "evaluate the synthetic scene real-valued (no 8-bit rounding)");
    compare->add_option("--pixel-size", cmp_h, "grid step h")->default_val(1.0);
    compare->add_option("--stencil", cmp_stencil, "standard | unnormalized")
        ->default_str("standard");
    compare->add_option("--threads", cmp_threads, "worker threads (0 = all cores)")->default_val(0);
    compare->add_option("--save-classical", cmp_save_classical, "dump the classical K^w field");
    compare->add_option("--save-discrete", cmp_save_discrete, "dump the discrete K^w field");
    compare->add_option("--mask-apexes", cmp_mask_apexes,
                        "diagnostics: exclude pixels within this radius of the cone apexes");

    // synth
    auto* synth = app.add_subcommand("synth", "Generate a synthetic test image");
    SynthOptions sopt;
    synth->add_option("output", sopt.output, "output PGM path")->required();
    synth->add_option("--kind", sopt.kind, "flat | cone | cylinder | ramp | composite")
        ->default_str("composite");
    synth->add_option("--size", sopt.size, "image size WxH");
    synth->add_option("--config", sopt.config_path, "key=value config file (flags override)");
    synth->add_option("--level", sopt.level, "flat: intensity level");
    synth->add_option("--apex", sopt.apex, "cone: apex position X Y")->expected(2);
    synth->add_option("--radius", sopt.radius, "cone/cylinder: radius in pixels");
    synth->add_option("--peak", sopt.peak, "cone/cylinder: peak intensity");
    synth->add_option("--axis", sopt.axis, "cylinder: horizontal | vertical");
    synth->add_option("--center", sopt.center, "cylinder: center line coordinate");
    synth->add_option("--a", sopt.a, "ramp: x coefficient");
    synth->add_option("--b", sopt.b, "ramp: y coefficient");
    synth->add_option("--c", sopt.c, "ramp: offset");
    synth->add_option("--field", sopt.field_output, "also dump the real-valued render (.f64)");

    // lut-dump
    auto* lut_dump = app.add_subcommand("lut-dump", "Write a binary angle-table dump");
    std::string lut_variant = "full", lut_out;
    lut_dump->add_option("output", lut_out, "output path")->required();
    lut_dump->add_option("--variant", lut_variant, "full | partial:T")->default_str("full");

    // bench
    auto* bench = app.add_subcommand("bench", "Measure throughput of every scheme path");
    std::string bench_input, bench_size = "1024x1024", bench_csv;
    int bench_reps = 5, bench_threads = 0;
    bench->add_option("input", bench_input, "input PGM (default: synthetic composite)");
    bench->add_option("--size", bench_size, "synthetic input size WxH")->default_str("1024x1024");
    bench->add_option("--reps", bench_reps, "timed repetitions (>= 3)")->default_val(5);
    bench->add_option("--threads", bench_threads, "worker threads (0 = all cores)")->default_val(0);
    bench->add_option("--csv", bench_csv, "also write the report as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed())
            return run_compute(in_path, out_path, scheme, lut_text, h, boundary, stencil, threads,
                               vis_path, vis_offset, vis_gain);
        if (compare->parsed())
            return run_compare(cmp_input, cmp_csv, cmp_region, cmp_size, cmp_unquantized, cmp_h,
                               cmp_stencil, cmp_threads, cmp_save_classical, cmp_save_discrete,
                               cmp_mask_apexes);
        if (synth->parsed()) return run_synth(sopt);
        if (lut_dump->parsed()) return run_lut_dump(lut_variant, lut_out);
        if (bench->parsed())
            return run_bench_cmd(bench_input, bench_size, bench_reps, bench_threads, bench_csv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
