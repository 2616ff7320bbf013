#pragma once

#include "trigsurf/freq_set.hpp"
#include "trigsurf/types.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace trigsurf {

/// Tolerances shared by the experiment runners. The success thresholds stand
/// in for the unquantified "high probability" / "perfect recovery" language
/// in the underlying results; both are adjustable from the CLI.
struct ExperimentTolerances {
    double tol_root = 1e-12;
    double rank_tol = 1e-11;
    double pinv_tol = 1e-10;
    /// A trial succeeds when recovery is unique and the coefficient match
    /// reaches this value.
    double match_threshold = 1.0 - 1e-8;
    /// A scenario passes when the success rate reaches this value.
    double rate_threshold = 0.95;
};

struct TrialRecord {
    int trial_index = 0;
    bool success = false;
    double match = 0.0;
    int null_space_dim = 0;
    double runtime_ms = 0.0;
};

struct ExperimentSummary {
    std::string scenario;
    int trials = 0;
    double success_rate = 0.0;
    double mean_match = 0.0;
    int non_unique_count = 0;
    std::vector<TrialRecord> records;
};

/// One irreducible surface per trial: generate, sample N points, recover,
/// score against the generator's coefficients.
struct IrreducibleConfig {
    std::string scenario = "custom";
    int dim = 2;
    std::vector<int> extents = {3, 3};
    int sample_count = 8;
    int trials = 100;
    std::uint64_t seed = 0;
    ExperimentTolerances tol;
};

ExperimentSummary run_irreducible_experiment(const IrreducibleConfig& cfg);

/// Union of component surfaces: per trial, generate one polynomial per
/// component, take the product as ground truth, sample each component with
/// its allocated count, pool, and recover at the product bandwidth. Each
/// allocation in `allocations` gets its own summary over the same per-trial
/// polynomials.
struct UnionConfig {
    std::string scenario = "union";
    int dim = 2;
    std::vector<std::vector<int>> component_extents = {{3, 3}, {3, 3}};
    std::vector<std::vector<int>> allocations = {{8, 16}};
    int trials = 100;
    std::uint64_t seed = 0;
    ExperimentTolerances tol;
};

struct AllocationSummary {
    std::vector<int> allocation;
    ExperimentSummary summary;
};

std::vector<AllocationSummary> run_union_experiment(const UnionConfig& cfg);

/// Rank of the gamma-bandwidth feature matrix for points sampled on a
/// lambda-bandlimited surface, against the shift-set prediction, plus an
/// off-surface control that must come out full rank.
struct RankIdentityConfig {
    std::string scenario = "rank_identity";
    int dim = 2;
    std::vector<int> lambda_extents = {3, 3};
    std::vector<int> gamma_extents = {13, 13};
    int sample_count = 60;
    int trials = 100;
    std::uint64_t seed = 0;
    ExperimentTolerances tol;
};

struct RankIdentityTrial {
    int trial_index = 0;
    int observed_on_surface = 0;
    int observed_off_surface = 0;
    bool success = false;  // on-surface rank matches the prediction
    bool off_surface_full_rank = false;
    double runtime_ms = 0.0;
};

struct RankIdentitySummary {
    std::string scenario;
    int trials = 0;
    int predicted_rank = 0;
    int expected_off_surface_rank = 0;
    double on_surface_success_rate = 0.0;
    double off_surface_success_rate = 0.0;
    std::vector<RankIdentityTrial> records;
};

RankIdentitySummary run_rank_identity_experiment(const RankIdentityConfig& cfg);

/// Per trial: random curve over lambda, random real gamma-bandlimited
/// function, certified anchors, kernel interpolant; evaluated on fresh
/// on-surface points (error asserted relative to the coefficient norm) and
/// on uniform off-surface points (deviation reported, not asserted).
struct InterpolationConfig {
    std::string scenario = "fig4";
    int dim = 2;
    std::vector<int> lambda_extents = {3, 3};
    std::vector<int> gamma_extents = {13, 13};
    int trials = 100;
    std::uint64_t seed = 0;
    int test_point_count = 200;
    int anchor_max_retries = 50;
    double on_surface_err_threshold = 1e-6;
    ExperimentTolerances tol;
};

struct InterpolationTrial {
    int trial_index = 0;
    bool success = false;
    double on_surface_max_err_rel = 0.0;
    double off_surface_median_dev_rel = 0.0;
    double off_surface_max_dev_rel = 0.0;
    int anchor_count = 0;
    double runtime_ms = 0.0;
    std::string note;  // failure reason when a stage threw
};

struct InterpolationSummary {
    std::string scenario;
    int trials = 0;
    double success_rate = 0.0;
    int anchor_count = 0;   // P = |gamma| - |gamma : lambda|
    int gamma_size = 0;     // parameter count of the direct representation
    double max_on_surface_err_rel = 0.0;
    double median_off_surface_dev_rel = 0.0;
    std::vector<InterpolationTrial> records;
};

InterpolationSummary run_interpolation_experiment(const InterpolationConfig& cfg);

/// A named scenario bundled for the CLI: summary JSON, per-trial CSV files
/// (name -> content), a one-line human digest, and whether the scenario's
/// built-in thresholds were met (drives `experiment --assert`).
struct ScenarioOutcome {
    std::string scenario;
    std::string summary_json;
    std::vector<std::pair<std::string, std::string>> csv_files;
    std::string detail;
    bool thresholds_met = false;
};

/// Known names: fig1, fig2, fig3, fig4, dim3_counts, rank_identity. Throws
/// std::invalid_argument for anything else.
ScenarioOutcome run_scenario(const std::string& name, int trials, std::uint64_t seed,
                             const ExperimentTolerances& tol);

std::vector<std::string> scenario_names();

/// Serialization used by the CLI for ad-hoc runs.
std::string summary_to_json(const ExperimentSummary& s, const std::string& records_csv_path);
std::string records_to_csv(const std::vector<TrialRecord>& records);

}  // namespace trigsurf
