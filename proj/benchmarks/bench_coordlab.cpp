#include <benchmark/benchmark.h>

#include <array>
#include <cmath>

#include "coordlab/coordlab.hpp"
#ifdef COORDLAB_BENCH_CLI
#include "coordlab_cli/cli.hpp"
#endif

using namespace coordlab;

namespace {

void BM_Integrate2dSmooth(benchmark::State& state) {
  const Rectangle r(0, 1, 0, 1);
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_2d([](double x, double y) { return std::exp(x + y); }, r, tol).value);
  }
}
BENCHMARK(BM_Integrate2dSmooth)->Arg(6)->Arg(9)->Arg(12);

void BM_Integrate2dKinked(benchmark::State& state) {
  const Rectangle r(0, 1, 0, 1);
  const std::array<double, 1> mid{0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_2d([](double x, double y) { return std::abs(2 * x - 1) * std::abs(2 * y - 1); },
                     r, 1e-12, mid, mid)
            .value);
  }
}
BENCHMARK(BM_Integrate2dKinked);

void BM_MidpointIdentity(benchmark::State& state) {
  const auto& f = find_entry("exp_sum").fn;
  const Rectangle r(1, 3, 0, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_identity(IdentityKind::Midpoint, f, r, std::nullopt).residual);
  }
}
BENCHMARK(BM_MidpointIdentity);

void BM_WeightedIdentity(benchmark::State& state) {
  const auto& f = find_entry("exp_sum").fn;
  const Rectangle r(1, 3, 0, 2);
  const WeightPair w(0.3, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_identity(IdentityKind::WeightedCorner, f, r, w).residual);
  }
}
BENCHMARK(BM_WeightedIdentity);

void BM_ComputeMoments(benchmark::State& state) {
  const auto& f = find_entry("cubic_mix").fn;
  const Rectangle r(1, 3, 0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compute_moments(f, r).mean);
}
BENCHMARK(BM_ComputeMoments);

void BM_CoordConvexCheck(benchmark::State& state) {
  const auto& f = find_entry("x2y2").fn;
  const Rectangle r(0, 1, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_coord_convex(f, r).violations);
}
BENCHMARK(BM_CoordConvexCheck);

#ifdef COORDLAB_BENCH_CLI
void BM_Sweep(benchmark::State& state) {
  cli::RunConfig cfg;
  cfg.command = cli::Command::Sweep;
  cfg.corpus_filter = {"x2y2"};
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(cli::build_rows(cfg).size());
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);
#endif

}  // namespace

BENCHMARK_MAIN();
