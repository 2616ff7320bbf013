#include "trigsurf/interpolant.hpp"
#include "trigsurf/recovery.hpp"
#include "trigsurf/rng.hpp"
#include "trigsurf/trig_poly.hpp"
#include "trigsurf/zero_sampler.hpp"

#include <benchmark/benchmark.h>

using namespace trigsurf;

namespace {

Point random_point(Rng& rng, int dim) {
    Point x(dim);
    for (int i = 0; i < dim; ++i) x[i] = rng.uniform01();
    return x;
}

void BM_Eval(benchmark::State& state) {
    const int extent = static_cast<int>(state.range(0));
    const auto p = random_real_coefficients(FrequencySet::rect(2, {extent, extent}), 1);
    Rng rng(2);
    const Point x = random_point(rng, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.eval(x));
    }
    state.SetItemsProcessed(state.iterations() * p.support().size());
}
BENCHMARK(BM_Eval)->Arg(3)->Arg(5)->Arg(13);

void BM_FeatureMatrix(benchmark::State& state) {
    const auto bw = FrequencySet::rect(2, {13, 13});
    Rng rng(3);
    SampleSet xs(2);
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i) xs.add(random_point(rng, 2), 0, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(feature_matrix(bw, xs));
    }
}
BENCHMARK(BM_FeatureMatrix)->Arg(60)->Arg(200);

void BM_SampleZeroSet(benchmark::State& state) {
    const auto drawn = random_real_polynomial(FrequencySet::rect(2, {3, 3}), 4);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_zero_set(drawn.poly, static_cast<int>(state.range(0)),
                                                 1e-12, seed++));
    }
}
BENCHMARK(BM_SampleZeroSet)->Arg(8)->Arg(60);

void BM_Recover(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const std::vector<int> extents(dim, 3);
    const auto bw = FrequencySet::rect(dim, extents);
    const auto drawn = random_real_polynomial(bw, 5);
    const auto X =
        sample_zero_set(drawn.poly, static_cast<int>(bw.size()) - 1, 1e-12, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(recover_coefficients(X, bw));
    }
}
BENCHMARK(BM_Recover)->Arg(2)->Arg(3);

void BM_DirichletKernel(benchmark::State& state) {
    const auto gamma = FrequencySet::rect(2, {13, 13});
    Rng rng(7);
    const Point x = random_point(rng, 2);
    const Point y = random_point(rng, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dirichlet_kernel(gamma, x, y));
    }
}
BENCHMARK(BM_DirichletKernel);

void BM_InterpolantBuild(benchmark::State& state) {
    const auto lambda = FrequencySet::rect(2, {3, 3});
    const auto gamma = FrequencySet::rect(2, {13, 13});
    const auto curve = random_real_polynomial(lambda, 8).poly;
    const auto anchors = select_anchors(curve, gamma, 9);
    const auto f = random_real_coefficients(gamma, 10);
    Eigen::VectorXcd fv(static_cast<Eigen::Index>(anchors.size()));
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        fv[static_cast<Eigen::Index>(i)] = f.eval(anchors.point(i));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_interpolant(fv, anchors, gamma));
    }
}
BENCHMARK(BM_InterpolantBuild);

void BM_InterpolantEval(benchmark::State& state) {
    const auto lambda = FrequencySet::rect(2, {3, 3});
    const auto gamma = FrequencySet::rect(2, {13, 13});
    const auto curve = random_real_polynomial(lambda, 11).poly;
    const auto anchors = select_anchors(curve, gamma, 12);
    const auto f = random_real_coefficients(gamma, 13);
    Eigen::VectorXcd fv(static_cast<Eigen::Index>(anchors.size()));
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        fv[static_cast<Eigen::Index>(i)] = f.eval(anchors.point(i));
    }
    const auto itp = build_interpolant(fv, anchors, gamma);
    Rng rng(14);
    const Point x = random_point(rng, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(itp.eval(x));
    }
}
BENCHMARK(BM_InterpolantEval);

}  // namespace

BENCHMARK_MAIN();
