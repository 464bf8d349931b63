#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "disclap/boundary.hpp"
#include "disclap/grid.hpp"
#include "disclap/poisson.hpp"
#include "disclap/spectral.hpp"
#include "disclap/stochastic.hpp"

using namespace disclap;

namespace {

const BoundarySpec& fixture() {
  static const BoundarySpec spec = BoundarySpec::parse("cos(t) + 3*sin(3*t)");
  return spec;
}

void BM_SpectralEval(benchmark::State& state) {
  const auto sol = solve_spectral(fixture(), 1.0, static_cast<int>(state.range(0)));
  double theta = 0.0;
  for (auto _ : state) {
    theta += 1e-3;
    benchmark::DoNotOptimize(eval_solution(sol, {0.7, theta}));
  }
}
BENCHMARK(BM_SpectralEval)->Arg(16)->Arg(64)->Arg(256);

void BM_PoissonQuadrature(benchmark::State& state) {
  const int quad = static_cast<int>(state.range(0));
  double theta = 0.0;
  for (auto _ : state) {
    theta += 1e-3;
    benchmark::DoNotOptimize(solve_poisson(fixture(), 1.0, {0.7, theta}, quad));
  }
}
BENCHMARK(BM_PoissonQuadrature)->Arg(128)->Arg(512)->Arg(2048);

void BM_FourierSampled(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<double> samples(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    samples[static_cast<std::size_t>(j)] =
        eval_boundary(fixture(), 2.0 * std::numbers::pi * j / m);
  }
  const auto spec = BoundarySpec::sampled(std::move(samples));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier_coefficients(spec, m / 2 - 1));
  }
}
BENCHMARK(BM_FourierSampled)->Arg(128)->Arg(1024);

void BM_McPaths(benchmark::State& state, McMethod method, double dt) {
  McConfig cfg;
  cfg.n_paths = state.range(0);
  cfg.seed = 42;
  cfg.method = method;
  cfg.dt = dt;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_solve(fixture(), 1.0, {0.5, 0.3}, cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.n_paths);
}
BENCHMARK_CAPTURE(BM_McPaths, exact_exit, McMethod::ExactExit, 1e-5)->Arg(10000);
BENCHMARK_CAPTURE(BM_McPaths, walk_on_spheres, McMethod::WalkOnSpheres, 1e-5)
    ->Arg(10000);
BENCHMARK_CAPTURE(BM_McPaths, euler_maruyama, McMethod::EulerMaruyama, 1e-3)
    ->Arg(1000);

void BM_GridSorDisc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto image = ImageGrid::filled(n, n, 0.0);
  auto mask = Mask::all_known(n, n);
  const double rho = 0.4 * n;
  const double c = (n - 1) / 2.0;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const double r = std::hypot(x - c, y - c);
      if (r < rho) {
        mask.set_known(x, y, false);
      } else {
        image.at(x, y) = 0.5 + 0.5 * std::sin(2.0 * std::atan2(y - c, x - c));
      }
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_grid(image, mask, 1e-6, 100000,
                                        SolveMethod::sor(sor_auto_omega(n))));
  }
}
BENCHMARK(BM_GridSorDisc)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
