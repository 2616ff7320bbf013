#include "trigsurf/experiment.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>

using namespace trigsurf;

namespace {

bool same_outcomes(const std::vector<TrialRecord>& a, const std::vector<TrialRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        // runtime_ms is wall clock and excluded
        if (a[i].trial_index != b[i].trial_index || a[i].success != b[i].success ||
            a[i].match != b[i].match || a[i].null_space_dim != b[i].null_space_dim) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("irreducible experiment at and below the critical count") {
    IrreducibleConfig cfg;
    cfg.scenario = "fig1_n8";
    cfg.sample_count = 8;
    cfg.trials = 10;
    cfg.seed = 0;

    const auto s8 = run_irreducible_experiment(cfg);
    CHECK(s8.trials == 10);
    CHECK(s8.success_rate == 1.0);
    CHECK(s8.mean_match >= 1.0 - 1e-8);
    CHECK(s8.non_unique_count == 0);

    cfg.sample_count = 7;
    const auto s7 = run_irreducible_experiment(cfg);
    CHECK(s7.success_rate == 0.0);
    CHECK(s7.non_unique_count == 10);

    // summary counters agree with the records
    int successes = 0;
    for (const auto& r : s8.records) successes += r.success ? 1 : 0;
    CHECK(static_cast<double>(successes) / s8.trials == s8.success_rate);

    // reruns are identical apart from wall-clock timings
    const auto again = run_irreducible_experiment(cfg);
    CHECK(same_outcomes(s7.records, again.records));
}

TEST_CASE("union experiment honors both sampling conditions") {
    UnionConfig cfg;
    cfg.trials = 5;
    cfg.seed = 0;
    cfg.allocations = {{8, 16}, {7, 17}, {8, 8}};

    const auto out = run_union_experiment(cfg);
    REQUIRE(out.size() == 3);
    CHECK(out[0].summary.success_rate == 1.0);   // both conditions met
    CHECK(out[1].summary.success_rate == 0.0);   // starved component
    CHECK(out[2].summary.success_rate == 0.0);   // total below |L|-1
    CHECK(out[2].summary.non_unique_count == 5);

    CHECK_THROWS_AS(
        [] {
            UnionConfig bad;
            bad.allocations = {{8}};
            run_union_experiment(bad);
        }(),
        std::invalid_argument);
}

TEST_CASE("rank identity experiment") {
    RankIdentityConfig cfg;
    cfg.trials = 5;
    const auto s = run_rank_identity_experiment(cfg);
    CHECK(s.predicted_rank == 48);
    CHECK(s.expected_off_surface_rank == 60);
    CHECK(s.on_surface_success_rate == 1.0);
    CHECK(s.off_surface_success_rate == 1.0);
}

TEST_CASE("interpolation experiment") {
    InterpolationConfig cfg;
    cfg.trials = 3;
    cfg.test_point_count = 60;
    const auto s = run_interpolation_experiment(cfg);
    CHECK(s.anchor_count == 48);
    CHECK(s.gamma_size == 169);
    CHECK(s.success_rate == 1.0);
    CHECK(s.max_on_surface_err_rel <= 1e-6);
    CHECK(s.median_off_surface_dev_rel > 1e-3);
    for (const auto& r : s.records) {
        CHECK(r.anchor_count == 48);
        CHECK(r.note.empty());
    }
}

TEST_CASE("scenario bundles carry summaries and csv records") {
    const auto outcome = run_scenario("fig1", 5, 0, ExperimentTolerances{});
    CHECK(outcome.scenario == "fig1");
    CHECK(outcome.thresholds_met);
    REQUIRE(outcome.csv_files.size() == 2);
    CHECK(outcome.csv_files[0].first == "fig1_n7_records.csv");
    CHECK(outcome.csv_files[1].first == "fig1_n8_records.csv");
    // header plus one row per trial
    const auto lines = [](const std::string& s) {
        return std::count(s.begin(), s.end(), '\n');
    };
    CHECK(lines(outcome.csv_files[0].second) == 6);
    CHECK(outcome.summary_json.find("\"scenario\": \"fig1\"") != std::string::npos);
    CHECK(!outcome.detail.empty());

    CHECK_THROWS_AS(run_scenario("fig99", 1, 0, ExperimentTolerances{}), std::invalid_argument);
}

TEST_CASE("records csv layout") {
    TrialRecord r;
    r.trial_index = 3;
    r.success = true;
    r.match = 0.5;
    r.null_space_dim = 1;
    r.runtime_ms = 2.0;
    const std::string csv = records_to_csv({r});
    CHECK(csv.find("trial,success,match,null_space_dim,runtime_ms\n") == 0);
    CHECK(csv.find("3,1,0.5,1,") != std::string::npos);
}

TEST_CASE("scenario names cover the experiment surface") {
    const auto names = scenario_names();
    REQUIRE(names.size() == 6);
    for (const auto& n : names) {
        CHECK_NOTHROW(run_scenario(n, 1, 0, ExperimentTolerances{}));
    }
}
