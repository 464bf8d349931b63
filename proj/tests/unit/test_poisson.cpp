#include "disclap/poisson.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "disclap/errors.hpp"
#include "disclap/spectral.hpp"
#include "test_support.hpp"

using namespace disclap;
using testsup::kPi;

TEST_CASE("poisson_kernel: closed-form spot values") {
  CHECK(poisson_kernel(1.0, {0.0, 0.7}, 2.1) == 1.0);
  CHECK(poisson_kernel(1.0, {0.0, 0.0}, 0.0) == 1.0);
  // theta = phi: (R^2 - r^2) / (R - r)^2 = (R + r)/(R - r)
  CHECK(poisson_kernel(1.0, {0.5, 1.3}, 1.3) == doctest::Approx(3.0).epsilon(1e-14));
  // antipodal: cos = -1
  CHECK(poisson_kernel(2.0, {1.0, 0.0}, kPi) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("poisson_kernel: domain checks") {
  CHECK_THROWS_AS(poisson_kernel(1.0, {1.0, 0.0}, 0.0), DomainError);
  CHECK_THROWS_AS(poisson_kernel(1.0, {1.5, 0.0}, 0.0), DomainError);
  CHECK_THROWS_AS(poisson_kernel(0.0, {0.0, 0.0}, 0.0), InvalidArgument);
}

TEST_CASE("property: kernel positivity and angular symmetry") {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> rad(0.0, 0.999), ang(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double r = rad(gen), th = ang(gen), phi = ang(gen), shift = ang(gen);
    const double v = poisson_kernel(1.0, {r, th}, phi);
    CHECK(v > 0.0);
    // depends on theta - phi only
    CHECK(v == doctest::Approx(poisson_kernel(1.0, {r, th + shift}, phi + shift))
                   .epsilon(1e-12));
    // even in theta - phi
    CHECK(v == doctest::Approx(poisson_kernel(1.0, {r, phi}, th)).epsilon(1e-12));
  }
}

TEST_CASE("effective_quad_points escalates near the boundary") {
  CHECK(effective_quad_points(1.0, {0.5, 0.0}, 512) == 512);
  CHECK(effective_quad_points(1.0, {0.95, 0.0}, 512) == 512);
  CHECK(effective_quad_points(1.0, {0.96, 0.0}, 512) == 1600);  // ceil(64/0.04)
  CHECK(effective_quad_points(1.0, {0.96, 0.0}, 4096) == 4096);
  CHECK(effective_quad_points(2.0, {1.98, 0.0}, 512) == 6400);  // ceil(64/0.01)
  // escalation saturates instead of overflowing for near-boundary points
  CHECK(effective_quad_points(1.0, {1.0 - 1e-13, 0.0}, 512) == (1 << 26));
}

TEST_CASE("solve_poisson: quadrature values") {
  SUBCASE("sin(2t) at (0.5, pi/4) equals r^2 sin(2 theta)") {
    const auto spec = BoundarySpec::parse("sin(2*t)");
    CHECK(std::abs(solve_poisson(spec, 1.0, {0.5, kPi / 4}, 512) - 0.25) < 1e-10);
  }
  SUBCASE("constants reproduce exactly because the kernel has unit mass") {
    const auto spec = BoundarySpec::constant(3.7);
    CHECK(std::abs(solve_poisson(spec, 1.0, {0.7, 1.2}, 512) - 3.7) < 1e-12);
    CHECK(std::abs(solve_poisson(spec, 2.0, {0.0, 0.0}, 64) - 3.7) < 1e-12);
  }
  SUBCASE("center picks up the boundary mean") {
    const auto spec = BoundarySpec::parse("sin(2*t)");
    CHECK(std::abs(solve_poisson(spec, 1.0, {0.0, 0.42}, 512)) < 1e-12);
  }
  SUBCASE("r = R serves the boundary value directly") {
    const auto spec = BoundarySpec::parse("sin(2*t)");
    CHECK(solve_poisson(spec, 1.0, {1.0, 0.3}, 512) ==
          doctest::Approx(std::sin(0.6)).epsilon(1e-14));
  }
  SUBCASE("domain and argument errors") {
    const auto spec = BoundarySpec::constant(1.0);
    CHECK_THROWS_AS(solve_poisson(spec, 1.0, {1.5, 0.0}, 512), DomainError);
    CHECK_THROWS_AS(solve_poisson(spec, 1.0, {0.5, 0.0}, 8), InvalidArgument);
  }
}

TEST_CASE("kernel_mass: normalization") {
  CHECK(kernel_mass(1.0, {0.0, 0.0}, 64) == 1.0);  // kernel is identically 1
  CHECK(std::abs(kernel_mass(1.0, {0.9, 0.4}, 2048) - 1.0) < 1e-8);
  CHECK(std::abs(kernel_mass(5.0, {2.5, 0.0}, 512) - 1.0) < 1e-10);
}

TEST_CASE("kernel_mass: quadrature error decays with the point count") {
  // r = 0.5 converges below the roundoff floor almost immediately, so the
  // comparison allows a couple of ulps of noise
  const double e64 = std::abs(kernel_mass(1.0, {0.5, 0.0}, 64) - 1.0);
  const double e256 = std::abs(kernel_mass(1.0, {0.5, 0.0}, 256) - 1.0);
  const double e1024 = std::abs(kernel_mass(1.0, {0.5, 0.0}, 1024) - 1.0);
  CHECK(e64 <= 1e-14);
  CHECK(e64 + 5e-16 >= e256);
  CHECK(e256 + 5e-16 >= e1024);

  // closer to the boundary the decay is strict and visible
  const double f64 = std::abs(kernel_mass(1.0, {0.9, 0.0}, 64) - 1.0);
  const double f256 = std::abs(kernel_mass(1.0, {0.9, 0.0}, 256) - 1.0);
  CHECK(f64 > 1e-4);
  CHECK(f256 < 1e-10);
  CHECK(f64 > f256);
}

TEST_CASE("backend equivalence: Poisson quadrature matches the spectral series") {
  const char* fixtures[] = {"sin(2*t)", "cos(t) + 3*sin(3*t)", "7"};
  for (const char* text : fixtures) {
    CAPTURE(text);
    const auto spec = BoundarySpec::parse(text);
    const auto sol = solve_spectral(spec, 1.0, 64);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const PolarPoint p{0.95 * (i + 1) / 20.0, kTwoPi * j / 20.0};
        worst = std::max(worst, std::abs(solve_poisson(spec, 1.0, p, 512) -
                                         eval_solution(sol, p)));
      }
    }
    CHECK(worst <= 1e-8);
  }
}
