// Command line front end: polynomial generation, zero-set sampling and
// tracing, null-space recovery, kernel interpolants, and the seeded
// experiment scenarios. Exit codes: 0 success, 1 runtime failure, 2 invalid
// arguments or malformed input files, 3 experiment thresholds unmet under
// --assert.

#include "trigsurf/experiment.hpp"
#include "trigsurf/interpolant.hpp"
#include "trigsurf/io.hpp"
#include "trigsurf/recovery.hpp"
#include "trigsurf/trig_poly.hpp"
#include "trigsurf/zero_sampler.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace trigsurf;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
        io::write_file(out_path, content);
    }
}

struct GenArgs {
    int dim = 2;
    std::vector<int> extents = {3, 3};
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    const auto drawn = random_real_polynomial(FrequencySet::rect(a.dim, a.extents), a.seed);
    emit(io::to_json(drawn.poly, a.seed), a.out);
    return 0;
}

struct SampleArgs {
    std::string poly_path;
    int count = 8;
    double tol_root = 1e-12;
    std::uint64_t seed = 0;
    int max_attempts = 1000;
    std::string out;
};

int run_sample(const SampleArgs& a) {
    const TrigPolynomial p = io::polynomial_from_json(io::read_file(a.poly_path));
    const SampleSet s = sample_zero_set(p, a.count, a.tol_root, a.seed, a.max_attempts);
    emit(io::to_csv(s), a.out);
    return 0;
}

struct TraceArgs {
    std::string poly_path;
    int resolution = 256;
    std::string out;
};

int run_trace(const TraceArgs& a) {
    const TrigPolynomial p = io::polynomial_from_json(io::read_file(a.poly_path));
    emit(io::to_csv(trace_zero_set(p, a.resolution)), a.out);
    return 0;
}

struct RecoverArgs {
    std::string samples_path;
    std::vector<int> extents;
    std::string bandwidth_path;
    double rank_tol = 1e-11;
    std::string truth_path;
    std::string out;
};

int run_recover(const RecoverArgs& a) {
    const SampleSet samples = io::sample_set_from_csv(io::read_file(a.samples_path));
    std::optional<FrequencySet> bandwidth;
    if (!a.bandwidth_path.empty()) {
        bandwidth = io::frequency_set_from_json(io::read_file(a.bandwidth_path));
    } else if (!a.extents.empty()) {
        bandwidth = FrequencySet::rect(samples.dim(), a.extents);
    } else {
        throw CLI::ValidationError("recover", "either --extents or --bandwidth is required");
    }

    const RecoveryResult result = recover_coefficients(samples, *bandwidth, a.rank_tol);
    std::optional<double> match;
    if (!a.truth_path.empty()) {
        const TrigPolynomial truth = io::polynomial_from_json(io::read_file(a.truth_path));
        match = coefficient_match(result.coefficients, truth);
    }
    emit(io::to_json(result, match), a.out);
    return 0;
}

struct InterpBuildArgs {
    std::string curve_path;
    std::string function_path;
    std::uint64_t seed = 0;
    double pinv_tol = 1e-10;
    double tol_root = 1e-12;
    int max_retries = 50;
    std::string out;
};

int run_interp_build(const InterpBuildArgs& a) {
    const TrigPolynomial curve = io::polynomial_from_json(io::read_file(a.curve_path));
    const TrigPolynomial f = io::polynomial_from_json(io::read_file(a.function_path));

    const SampleSet anchors = select_anchors(curve, f.support(), a.seed, a.max_retries,
                                             a.tol_root, std::sqrt(a.pinv_tol));
    Eigen::VectorXcd values(static_cast<Eigen::Index>(anchors.size()));
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        values[static_cast<Eigen::Index>(i)] = f.eval(anchors.point(i));
    }
    const Interpolant itp = build_interpolant(values, anchors, f.support(), a.pinv_tol);
    emit(io::to_json(itp), a.out);
    return 0;
}

struct InterpEvalArgs {
    std::string interp_path;
    std::vector<double> point;
    std::string function_path;
};

int run_interp_eval(const InterpEvalArgs& a) {
    const Interpolant itp = io::interpolant_from_json(io::read_file(a.interp_path));
    Point x(static_cast<Eigen::Index>(a.point.size()));
    for (std::size_t i = 0; i < a.point.size(); ++i) x[static_cast<Eigen::Index>(i)] = a.point[i];

    const Complex value = itp.eval(x);
    char buf[256];
    std::string json = "{\n  \"value\": [";
    std::snprintf(buf, sizeof(buf), "%.17g, %.17g]", value.real(), value.imag());
    json += buf;
    if (!a.function_path.empty()) {
        const TrigPolynomial f = io::polynomial_from_json(io::read_file(a.function_path));
        const Complex truth = f.eval(x);
        std::snprintf(buf, sizeof(buf), ",\n  \"truth\": [%.17g, %.17g],\n  \"abs_error\": %.17g",
                      truth.real(), truth.imag(), std::abs(value - truth));
        json += buf;
    }
    json += "\n}\n";
    std::cout << json;
    return 0;
}

struct ExperimentArgs {
    std::string scenario;
    int trials = 100;
    std::uint64_t seed = 0;
    ExperimentTolerances tol;
    std::string out_dir = ".";
    bool assert_thresholds = false;
    // custom scenario knobs
    int dim = 2;
    std::vector<int> extents = {3, 3};
    int count = 8;
};

int run_experiment(const ExperimentArgs& a) {
    namespace fs = std::filesystem;
    if (a.scenario == "custom") {
        IrreducibleConfig cfg;
        cfg.scenario = "custom";
        cfg.dim = a.dim;
        cfg.extents = a.extents;
        cfg.sample_count = a.count;
        cfg.trials = a.trials;
        cfg.seed = a.seed;
        cfg.tol = a.tol;
        const ExperimentSummary s = run_irreducible_experiment(cfg);
        io::write_file(fs::path(a.out_dir) / "custom_records.csv", records_to_csv(s.records));
        io::write_file(fs::path(a.out_dir) / "custom_summary.json",
                       summary_to_json(s, "custom_records.csv"));
        std::printf("custom: success %.0f/%d, mean match %.12g\n", s.success_rate * s.trials,
                    s.trials, s.mean_match);
        if (a.assert_thresholds && s.success_rate < a.tol.rate_threshold) return 3;
        return 0;
    }

    const ScenarioOutcome outcome = run_scenario(a.scenario, a.trials, a.seed, a.tol);
    io::write_file(fs::path(a.out_dir) / (outcome.scenario + "_summary.json"),
                   outcome.summary_json);
    for (const auto& [name, content] : outcome.csv_files) {
        io::write_file(fs::path(a.out_dir) / name, content);
    }
    std::printf("%s: %s\n", outcome.scenario.c_str(), outcome.detail.c_str());
    if (a.assert_thresholds && !outcome.thresholds_met) {
        std::fprintf(stderr, "%s: thresholds not met\n", outcome.scenario.c_str());
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bandlimited level-set surfaces: recovery from samples, sampling-condition "
                 "experiments, and on-surface kernel interpolants"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random real polynomial (JSON)");
    gen_cmd->add_option("--dim", gen.dim, "Ambient dimension")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--extents", gen.extents, "Bandwidth extents, e.g. 3,3")
        ->delimiter(',')
        ->required();
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--out", gen.out, "Output path (stdout when omitted)");

    SampleArgs sample;
    auto* sample_cmd = app.add_subcommand("sample", "Sample points on a zero set (CSV)");
    sample_cmd->add_option("--poly", sample.poly_path, "Polynomial JSON")->required();
    sample_cmd->add_option("--count", sample.count, "Number of points")
        ->check(CLI::PositiveNumber);
    sample_cmd->add_option("--tol-root", sample.tol_root, "Root residual tolerance");
    sample_cmd->add_option("--seed", sample.seed, "Random seed");
    sample_cmd->add_option("--max-attempts", sample.max_attempts, "Slice budget per point");
    sample_cmd->add_option("--out", sample.out, "Output path (stdout when omitted)");

    TraceArgs trace;
    auto* trace_cmd = app.add_subcommand("trace", "Dense zero-set trace for plotting (CSV)");
    trace_cmd->add_option("--poly", trace.poly_path, "Polynomial JSON")->required();
    trace_cmd->add_option("--resolution", trace.resolution, "Grid cells per axis");
    trace_cmd->add_option("--out", trace.out, "Output path (stdout when omitted)");

    RecoverArgs recover;
    auto* recover_cmd =
        app.add_subcommand("recover", "Recover surface coefficients from samples (JSON)");
    recover_cmd->add_option("--samples", recover.samples_path, "Sample CSV")->required();
    recover_cmd->add_option("--extents", recover.extents, "Rectangular bandwidth extents")
        ->delimiter(',');
    recover_cmd->add_option("--bandwidth", recover.bandwidth_path,
                            "Frequency set JSON (alternative to --extents)");
    recover_cmd->add_option("--rank-tol", recover.rank_tol, "Relative rank tolerance");
    recover_cmd->add_option("--truth", recover.truth_path,
                            "Ground-truth polynomial JSON; adds a match score");
    recover_cmd->add_option("--out", recover.out, "Output path (stdout when omitted)");

    auto* interp_cmd = app.add_subcommand("interp", "Kernel interpolants on a surface");
    interp_cmd->require_subcommand(1);

    InterpBuildArgs ibuild;
    auto* ibuild_cmd = interp_cmd->add_subcommand("build", "Select anchors and build (JSON)");
    ibuild_cmd->add_option("--curve", ibuild.curve_path, "Surface polynomial JSON")->required();
    ibuild_cmd->add_option("--function", ibuild.function_path, "Function polynomial JSON")
        ->required();
    ibuild_cmd->add_option("--seed", ibuild.seed, "Random seed");
    ibuild_cmd->add_option("--pinv-tol", ibuild.pinv_tol, "Pseudo-inverse relative cutoff");
    ibuild_cmd->add_option("--tol-root", ibuild.tol_root, "Root residual tolerance");
    ibuild_cmd->add_option("--max-retries", ibuild.max_retries, "Anchor redraw budget");
    ibuild_cmd->add_option("--out", ibuild.out, "Output path (stdout when omitted)");

    InterpEvalArgs ieval;
    auto* ieval_cmd = interp_cmd->add_subcommand("eval", "Evaluate an interpolant at a point");
    ieval_cmd->add_option("--interp", ieval.interp_path, "Interpolant JSON")->required();
    ieval_cmd->add_option("--point", ieval.point, "Coordinates, e.g. 0.1,0.2")
        ->delimiter(',')
        ->required();
    ieval_cmd->add_option("--function", ieval.function_path,
                          "Function polynomial JSON; adds truth and error");

    ExperimentArgs exp;
    auto* exp_cmd = app.add_subcommand("experiment", "Run a seeded scenario");
    std::string scenario_help = "Scenario:";
    for (const auto& n : scenario_names()) scenario_help += " " + n;
    scenario_help += " custom";
    exp_cmd->add_option("scenario", exp.scenario, scenario_help)->required();
    exp_cmd->add_option("--trials", exp.trials, "Trials per case")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--seed", exp.seed, "Base seed; trial t uses seed + t");
    exp_cmd->add_option("--tol-root", exp.tol.tol_root, "Root residual tolerance");
    exp_cmd->add_option("--rank-tol", exp.tol.rank_tol, "Relative rank tolerance");
    exp_cmd->add_option("--pinv-tol", exp.tol.pinv_tol, "Pseudo-inverse relative cutoff");
    exp_cmd->add_option("--match-threshold", exp.tol.match_threshold,
                        "Per-trial success match threshold");
    exp_cmd->add_option("--rate-threshold", exp.tol.rate_threshold,
                        "Scenario success-rate threshold");
    exp_cmd->add_option("--out", exp.out_dir, "Output directory");
    exp_cmd->add_flag("--assert", exp.assert_thresholds,
                      "Exit 3 when scenario thresholds are not met");
    exp_cmd->add_option("--dim", exp.dim, "custom: ambient dimension");
    exp_cmd->add_option("--extents", exp.extents, "custom: bandwidth extents")->delimiter(',');
    exp_cmd->add_option("--count", exp.count, "custom: samples per trial");

    try {
        app.parse(argc, argv);
        if (gen_cmd->parsed()) return run_gen(gen);
        if (sample_cmd->parsed()) return run_sample(sample);
        if (trace_cmd->parsed()) return run_trace(trace);
        if (recover_cmd->parsed()) return run_recover(recover);
        if (interp_cmd->parsed()) {
            if (ibuild_cmd->parsed()) return run_interp_build(ibuild);
            if (ieval_cmd->parsed()) return run_interp_eval(ieval);
        }
        if (exp_cmd->parsed()) return run_experiment(exp);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const io::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
