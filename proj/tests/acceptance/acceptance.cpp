// Acceptance suite: ten end-to-end criteria with pinned tolerances and
// runtime budgets. Prints one PASS/FAIL line per criterion; the exit code is
// the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "disclap/boundary.hpp"
#include "disclap/harmonic_checks.hpp"
#include "disclap/imaging.hpp"
#include "disclap/netpbm.hpp"
#include "disclap/poisson.hpp"
#include "disclap/spectral.hpp"
#include "disclap/stochastic.hpp"

using namespace disclap;

namespace {

constexpr double kPi = std::numbers::pi;

struct Context {
  std::vector<std::string> notes;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// --- criterion 1: worked example ---------------------------------------------

void criterion_worked_example(Context& c) {
  const auto sol = solve_spectral(BoundarySpec::parse("sin(2*t)"), 1.0, 64);
  c.require(std::abs(sol.c0) <= 1e-12, "c0 = " + fmt(sol.c0) + " (want 0)");
  c.require(std::abs(sol.B[1] - 1.0) <= 1e-12,
            "B_2 = " + fmt(sol.B[1]) + " (want 1)");
  for (int n = 1; n <= sol.n_max(); ++n) {
    if (n != 2) {
      c.require(std::abs(sol.B[n - 1]) <= 1e-12 && std::abs(sol.A[n - 1]) <= 1e-12,
                "stray coefficient at mode " + std::to_string(n));
    }
  }
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const PolarPoint p{(i + 1) / 10.0 * 0.999999, 2.0 * kPi * j / 10.0};
      worst = std::max(worst, std::abs(eval_solution(sol, p) -
                                       p.r * p.r * std::sin(2.0 * p.theta)));
    }
  }
  c.require(worst <= 1e-10, "probe grid error " + fmt(worst) + " > 1e-10");
  c.note("B_2 = " + fmt(sol.B[1]) + ", probe error " + fmt(worst));
}

// --- criterion 2: backend equivalence ----------------------------------------

void criterion_backend_equivalence(Context& c) {
  for (const char* text : {"sin(2*t)", "cos(t) + 3*sin(3*t)", "7"}) {
    const auto spec = BoundarySpec::parse(text);
    const auto sol = solve_spectral(spec, 1.0, 64);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const PolarPoint p{0.95 * (i + 1) / 20.0, 2.0 * kPi * j / 20.0};
        worst = std::max(worst, std::abs(solve_poisson(spec, 1.0, p, 512) -
                                         eval_solution(sol, p)));
      }
    }
    c.require(worst <= 1e-8,
              std::string(text) + ": max |poisson - spectral| = " + fmt(worst));
    c.note(std::string(text) + ": " + fmt(worst));
  }
}

// --- criterion 3: Monte Carlo convergence ------------------------------------

McEstimate run_criterion3_method(McMethod method, int threads) {
  const auto spec = BoundarySpec::parse("100*sin(2*t)");
  McConfig cfg;
  cfg.n_paths = 100000;
  cfg.seed = 42;
  cfg.method = method;
  cfg.eps_shell = 1e-4;
  cfg.dt = 1e-5;
  return mc_solve(spec, 1.0, {0.5, kPi / 4}, cfg, threads);
}

void criterion_mc_convergence(Context& c) {
  const int threads = 2;
  const auto exact = run_criterion3_method(McMethod::ExactExit, threads);
  c.require(std::abs(exact.mean - 25.0) <= 3.0 * exact.std_error,
            "exact_exit mean " + fmt(exact.mean) + " off by more than 3 se");
  c.require(exact.std_error <= 0.3,
            "exact_exit std_error " + fmt(exact.std_error) + " > 0.3");
  c.note("exact " + fmt(exact.mean) + " +- " + fmt(exact.std_error));

  const auto wos = run_criterion3_method(McMethod::WalkOnSpheres, threads);
  c.require(std::abs(wos.mean - 25.0) <= 4.0 * wos.std_error,
            "walk_on_spheres mean " + fmt(wos.mean) + " off by more than 4 se");
  c.require(wos.std_error <= 0.3,
            "walk_on_spheres std_error " + fmt(wos.std_error) + " > 0.3");
  c.note("wos " + fmt(wos.mean) + " +- " + fmt(wos.std_error));

  const auto em = run_criterion3_method(McMethod::EulerMaruyama, threads);
  c.require(std::abs(em.mean - 25.0) <= 4.0 * em.std_error,
            "euler_maruyama mean " + fmt(em.mean) + " off by more than 4 se");
  c.require(em.std_error <= 0.3,
            "euler_maruyama std_error " + fmt(em.std_error) + " > 0.3");
  c.note("em " + fmt(em.mean) + " +- " + fmt(em.std_error));
}

// --- criterion 4: exit-law correctness ---------------------------------------

void criterion_exit_law(Context& c) {
  constexpr int kBins = 32;
  constexpr long kDraws = 1000000;
  // chi-squared upper 0.001 quantile, 31 degrees of freedom
  constexpr double kCrit = 61.098306081058126;

  std::vector<long> counts(kBins, 0);
  for (long i = 0; i < kDraws; ++i) {
    StreamRng rng(7, static_cast<std::uint64_t>(i));
    const double phi = sample_exact_exit(1.0, {0.0, 0.0}, rng);
    int b = static_cast<int>(phi / (2.0 * kPi) * kBins);
    if (b >= kBins) b = kBins - 1;
    ++counts[b];
  }
  double stat = 0.0;
  const double expect = static_cast<double>(kDraws) / kBins;
  for (long n : counts) stat += (n - expect) * (n - expect) / expect;
  c.require(stat < kCrit, "center uniformity chi2 = " + fmt(stat) +
                              " >= " + fmt(kCrit));
  c.note("center chi2 " + fmt(stat) + " (crit " + fmt(kCrit) + ")");

  // density at (0.5, 0) against the kernel, 3 sigma per bin
  const PolarPoint p{0.5, 0.0};
  std::vector<long> density(kBins, 0);
  for (long i = 0; i < kDraws; ++i) {
    StreamRng rng(8, static_cast<std::uint64_t>(i));
    const double phi = sample_exact_exit(1.0, p, rng);
    int b = static_cast<int>(phi / (2.0 * kPi) * kBins);
    if (b >= kBins) b = kBins - 1;
    ++density[b];
  }
  double worst_sigma = 0.0;
  for (int b = 0; b < kBins; ++b) {
    // expected mass from the kernel by fine trapezoid over the bin
    const double lo = 2.0 * kPi * b / kBins;
    const double hi = 2.0 * kPi * (b + 1) / kBins;
    const int m = 2000;
    double mass = 0.0;
    for (int k = 0; k <= m; ++k) {
      const double w = (k == 0 || k == m) ? 0.5 : 1.0;
      mass += w * poisson_kernel(1.0, p, lo + (hi - lo) * k / m);
    }
    mass *= (hi - lo) / m / (2.0 * kPi);
    const double want = mass * kDraws;
    worst_sigma = std::max(worst_sigma,
                           std::abs(density[b] - want) / std::sqrt(want));
  }
  c.require(worst_sigma < 3.0,
            "density deviation " + fmt(worst_sigma) + " sigma >= 3");
  c.note("worst bin deviation " + fmt(worst_sigma) + " sigma");
}

// --- criterion 5: kernel normalization ---------------------------------------

void criterion_kernel_mass(Context& c) {
  for (double r : {0.0, 0.5, 0.9}) {
    const double mass = kernel_mass(1.0, {r, 0.0}, kDefaultQuadPoints);
    c.require(std::abs(mass - 1.0) <= 1e-8,
              "mass(r=" + fmt(r) + ") = " + fmt(mass));
    c.note("r=" + fmt(r) + ": |mass-1| = " + fmt(std::abs(mass - 1.0)));
  }
}

// --- criterion 6: property suites --------------------------------------------

void criterion_properties(Context& c) {
  std::mt19937_64 gen(1234);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const char* text : {"sin(2*t)", "cos(t) + 3*sin(3*t)", "7"}) {
    const auto spec = BoundarySpec::parse(text);
    const auto sol = solve_spectral(spec, 1.0, 64);
    const auto field = make_field(sol);

    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double ang = 2.0 * kPi * unit(gen);
      const double cr = 0.8 * unit(gen);
      const double cx = cr * std::cos(ang), cy = cr * std::sin(ang);
      const double rho = (0.98 - cr) * (0.1 + 0.89 * unit(gen));
      worst = std::max(worst,
                       std::abs(mean_value_residual(field, cx, cy, rho, 256)));
    }
    c.require(worst <= 1e-10, std::string(text) + ": mean-value residual " +
                                  fmt(worst) + " > 1e-10");

    const auto mp = max_principle_check(field, 1.0, 64, 1024);
    c.require(mp.pass(), std::string(text) + ": max principle violated");
  }

  const ScalarField2D saddle{[](double x, double y) { return x * x - y * y; }, 1.0};
  const ScalarField2D expcos{
      [](double x, double y) { return std::exp(x) * std::cos(y); }, 1.0};
  const ScalarField2D constf{[](double, double) { return 3.25; }, 1.0};
  const ScalarField2D parab{[](double x, double y) { return x * x + y * y; }, 1.0};
  c.require(is_harmonic(saddle, 1e-8, 8).harmonic, "x^2-y^2 rejected");
  c.require(is_harmonic(expcos, 1e-8, 8).harmonic, "exp(x)cos(y) rejected");
  c.require(is_harmonic(constf, 1e-8, 8).harmonic, "constant rejected");
  c.require(!is_harmonic(parab, 1e-8, 8).harmonic, "x^2+y^2 accepted");
}

// --- criterion 7: uniqueness as a test ---------------------------------------

void criterion_uniqueness(Context& c) {
  for (const char* text : {"sin(2*t)", "cos(t) + 3*sin(3*t)", "7"}) {
    const auto spec = BoundarySpec::parse(text);
    const auto sol = solve_spectral(spec, 1.0, 64);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const PolarPoint p{0.95 * (i + 1) / 20.0, 2.0 * kPi * j / 20.0};
        worst = std::max(worst, std::abs(solve_poisson(spec, 1.0, p, 512) -
                                         eval_solution(sol, p)));
      }
    }
    c.require(worst <= 1e-6, std::string(text) + ": backend difference " +
                                 fmt(worst) + " > 1e-6");
  }
}

// --- criterion 8: discrete-continuum consistency ------------------------------

double disc_inpaint_error(int n) {
  auto image = ImageGrid::filled(n, n, 0.0);
  auto mask = Mask::all_known(n, n);
  const double rho = 0.4 * n;
  const double cx = (n - 1) / 2.0;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const double dx = x - cx, dy = y - cx;
      const double r = std::hypot(dx, dy);
      const double th = std::atan2(dy, dx);
      if (r < rho) {
        mask.set_known(x, y, false);
      } else {
        image.at(x, y) = 0.5 + 0.5 * std::sin(2.0 * th);
      }
    }
  }
  InpaintConfig cfg;
  cfg.tol = 1e-10;
  cfg.max_iters = 200000;
  const auto [out, report] = inpaint(image, mask, cfg);
  if (!report.converged) return std::nan("");
  double worst = 0.0;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if (mask.is_known(x, y)) continue;
      const double dx = x - cx, dy = y - cx;
      const double r = std::hypot(dx, dy);
      const double th = std::atan2(dy, dx);
      const double want = 0.5 + 0.5 * (r / rho) * (r / rho) * std::sin(2.0 * th);
      worst = std::max(worst, std::abs(out.at(x, y) - want));
    }
  }
  return worst;
}

void criterion_continuum(Context& c) {
  const double e64 = disc_inpaint_error(64);
  const double e128 = disc_inpaint_error(128);
  c.require(std::isfinite(e64) && std::isfinite(e128), "inpaint did not converge");
  const double ratio = e64 / e128;
  c.note("max error 64^2 = " + fmt(e64) + ", 128^2 = " + fmt(e128) +
         ", ratio " + fmt(ratio));
  c.require(ratio >= 3.0, "error ratio " + fmt(ratio) + " < 3.0");
}

// --- criterion 9: imaging unit behavior ---------------------------------------

void criterion_imaging(Context& c) {
  // single dead pixel restored to the neighbor average
  auto img = ImageGrid::filled(5, 5, 0.0);
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 5; ++x) img.at(x, y) = 0.1 + 0.03 * x + 0.05 * y;
  }
  const double expected =
      (img.at(1, 2) + img.at(3, 2) + img.at(2, 1) + img.at(2, 3)) / 4.0;
  img.at(2, 2) = 0.0;
  auto mask = Mask::all_known(5, 5);
  mask.set_known(2, 2, false);
  InpaintConfig cfg;
  cfg.tol = 1e-9;
  const auto [restored, report] = inpaint(img, mask, cfg);
  c.require(report.converged && std::abs(restored.at(2, 2) - expected) <= 1e-6,
            "dead pixel " + fmt(restored.at(2, 2)) + " vs " + fmt(expected));

  // denoise energy non-increasing over 50 steps on seeded noise
  auto noisy = ImageGrid::filled(24, 24, 0.0);
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto& p : noisy.pixels) p = unit(gen);
  double prev = dirichlet_energy(noisy);
  const double initial = prev;
  ImageGrid cur = noisy;
  bool monotone = true;
  for (int s = 0; s < 50; ++s) {
    cur = denoise(cur, 1, 0.2);
    const double e = dirichlet_energy(cur);
    monotone = monotone && e <= prev;
    prev = e;
  }
  c.require(monotone, "denoise energy increased during a step");
  c.require(prev < initial, "denoise energy did not decrease overall");
  c.note("energy " + fmt(initial) + " -> " + fmt(prev));

  // PGM P5 round trip, bit exact
  const std::string p1 = "/tmp/disclap_acceptance_a.pgm";
  const std::string p2 = "/tmp/disclap_acceptance_b.pgm";
  write_pgm(cur, p1);
  write_pgm(read_pgm(p1), p2);
  std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
  const std::string b1((std::istreambuf_iterator<char>(f1)),
                       std::istreambuf_iterator<char>());
  const std::string b2((std::istreambuf_iterator<char>(f2)),
                       std::istreambuf_iterator<char>());
  std::remove(p1.c_str());
  std::remove(p2.c_str());
  c.require(!b1.empty() && b1 == b2, "P5 round trip not byte-identical");
}

// --- criterion 10: determinism across thread counts ---------------------------

void criterion_determinism(Context& c) {
  for (McMethod m :
       {McMethod::ExactExit, McMethod::WalkOnSpheres, McMethod::EulerMaruyama}) {
    const auto a = run_criterion3_method(m, 1);
    const auto b = run_criterion3_method(m, 4);
    c.require(std::abs(a.mean - b.mean) <= 1e-9,
              std::string(mc_method_name(m)) + ": means differ by " +
                  fmt(std::abs(a.mean - b.mean)));
    c.require(a.n_paths == b.n_paths,
              std::string(mc_method_name(m)) + ": path counts differ");
  }
}

struct Criterion {
  int id;
  const char* label;
  double time_budget;  // seconds; 0 = no budget
  std::function<void(Context&)> fn;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example: spectral sin(2t) equals r^2 sin(2t)", 1.0,
       criterion_worked_example},
      {2, "backend equivalence: spectral vs Poisson quadrature", 5.0,
       criterion_backend_equivalence},
      {3, "Monte Carlo convergence (exact, WoS, Euler-Maruyama)", 30.0,
       criterion_mc_convergence},
      {4, "exit law: uniform from center, kernel density at (0.5, 0)", 30.0,
       criterion_exit_law},
      {5, "Poisson kernel mass is 1 at r/R in {0, 0.5, 0.9}", 1.0,
       criterion_kernel_mass},
      {6, "mean value, maximum principle and harmonicity probes", 5.0,
       criterion_properties},
      {7, "uniqueness: backends differ by at most 1e-6 on the probe grid", 0.0,
       criterion_uniqueness},
      {8, "discrete-continuum consistency of disc inpainting", 60.0,
       criterion_continuum},
      {9, "imaging: dead pixel, denoise energy, PGM round trip", 0.0,
       criterion_imaging},
      {10, "determinism: thread count does not change estimates", 0.0,
       criterion_determinism},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    Context ctx;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.fn(ctx);
    } catch (const std::exception& e) {
      ctx.ok = false;
      ctx.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (crit.time_budget > 0.0 && secs >= crit.time_budget) {
      ctx.ok = false;
      ctx.notes.push_back("runtime " + fmt(secs) + " s exceeded budget " +
                          fmt(crit.time_budget) + " s");
    }
    if (!ctx.ok) ++failures;
    std::printf("criterion %2d  %-58s  %s  (%.2f s)\n", crit.id, crit.label,
                ctx.ok ? "PASS" : "FAIL", secs);
    for (const auto& note : ctx.notes) {
      std::printf("              - %s\n", note.c_str());
    }
  }
  std::printf("acceptance: %d/%d criteria passed\n",
              static_cast<int>(criteria.size()) - failures,
              static_cast<int>(criteria.size()));
  return failures;
}
