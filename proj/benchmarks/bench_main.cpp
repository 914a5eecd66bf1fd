#include <benchmark/benchmark.h>

#include <vector>

#include <Eigen/Dense>

#include "holderdeg/constants.hpp"
#include "holderdeg/geometry.hpp"
#include "holderdeg/kernels.hpp"
#include "holderdeg/maps.hpp"
#include "holderdeg/projections.hpp"
#include "holderdeg/quadrature.hpp"
#include "holderdeg/random.hpp"
#include "holderdeg/schatten.hpp"
#include "holderdeg/specmod.hpp"

using namespace holderdeg;

static void BM_pT(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  projections::Tuple z;
  for (int j = 0; j < n; ++j) z.emplace_back(projections::Complex(0.3 * j - 0.2, 0.7));
  for (auto _ : state) benchmark::DoNotOptimize(projections::pT(z));
}
BENCHMARK(BM_pT)->Arg(1)->Arg(2)->Arg(3);

static void BM_ftilde(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto fx = maps::make_fixture("identity");
  const exterior::FtildeEvaluator ev(fx.map, k, constants::analytic_constants(1));
  StreamRng rng(11, 0);
  std::vector<Eigen::VectorXd> pts;
  for (int i = 0; i < 2 * k; ++i) pts.push_back(geometry::sample_sphere_ambient(rng, 1));
  for (auto _ : state) benchmark::DoNotOptimize(ev(pts));
  state.counters["patterns"] = static_cast<double>(ev.pattern_count());
}
BENCHMARK(BM_ftilde)->Arg(2)->Arg(3);

static void BM_smooth_mc(benchmark::State& state) {
  const auto fx = maps::make_fixture("zpow:2");
  quadrature::MCConfig mc;
  mc.samples = state.range(0);
  for (auto _ : state) {
    auto r = quadrature::mc_integrate(
        [&](std::span<const Eigen::VectorXd> p) { return p[0](0) * p[0](0); }, 1, 1, mc);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_smooth_mc)->Arg(100'000)->Unit(benchmark::kMillisecond);

static void BM_schatten_commutator(benchmark::State& state) {
  const std::vector<int> sizes{static_cast<int>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(schatten::commutator_summability(schatten::CommutatorDomain::circle, 0.5, sizes, 5.0));
}
BENCHMARK(BM_schatten_commutator)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_signature_module(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specmod::build_signature_module(L, 1.3));
}
BENCHMARK(BM_signature_module)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
