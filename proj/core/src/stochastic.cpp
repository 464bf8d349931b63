#include "disclap/stochastic.hpp"

#include <cmath>
#include <numeric>
#include <thread>

#include "disclap/errors.hpp"
#include "disclap/summation.hpp"
#include "em_kernel.hpp"

namespace disclap {

const char* mc_method_name(McMethod m) {
  switch (m) {
    case McMethod::WalkOnSpheres: return "walk_on_spheres";
    case McMethod::EulerMaruyama: return "euler_maruyama";
    case McMethod::ExactExit: return "exact_exit";
  }
  return "unknown";
}

double sample_exact_exit(double R, PolarPoint p, StreamRng& rng) {
  if (p.r >= R) {
    throw DomainError("sample_exact_exit: start point must be strictly inside");
  }
  // Inverse CDF of the disc harmonic measure seen from (r, theta); at r = 0
  // the map degenerates to phi = theta + 2*pi*(U - 1/2), i.e. uniform.
  const double c = (R - p.r) / (R + p.r);
  const double u = rng.next_unit();
  const double phi =
      p.theta + 2.0 * std::atan(c * std::tan(std::numbers::pi * (u - 0.5)));
  return wrap_angle(phi);
}

PolarPoint walk_on_spheres_step(double R, PolarPoint current, StreamRng& rng) {
  if (current.r >= R) {
    throw DomainError("walk_on_spheres_step: point must be strictly inside");
  }
  const double d = R - current.r;  // distance to the boundary
  const double psi = rng.next_angle();
  const Vec2 c = to_cartesian(current);
  return to_polar(c.x + d * std::cos(psi), c.y + d * std::sin(psi));
}

double estimate_from_exits(const BoundarySpec& spec,
                           std::span<const double> exit_angles) {
  if (exit_angles.empty()) {
    throw InvalidArgument("estimate_from_exits: need at least one exit angle");
  }
  std::vector<double> values(exit_angles.size());
  for (std::size_t i = 0; i < exit_angles.size(); ++i) {
    values[i] = eval_boundary(spec, exit_angles[i]);
  }
  return pairwise_sum(values) / static_cast<double>(values.size());
}

namespace {

struct PathOutputs {
  std::vector<double> exit_angle;
  std::vector<std::uint32_t> steps;
  std::vector<std::uint8_t> exited;
};

void run_exact_exit(const McConfig& cfg, double R, PolarPoint p, long first,
                    long count, PathOutputs& out) {
  for (long i = first; i < first + count; ++i) {
    StreamRng rng(cfg.seed, static_cast<std::uint64_t>(i));
    out.exit_angle[i] = sample_exact_exit(R, p, rng);
    out.steps[i] = 1;
    out.exited[i] = 1;
  }
}

void run_walk_on_spheres(const McConfig& cfg, double R, PolarPoint p, long first,
                         long count, PathOutputs& out) {
  const double absorb = cfg.eps_shell * R;
  for (long i = first; i < first + count; ++i) {
    StreamRng rng(cfg.seed, static_cast<std::uint64_t>(i));
    PolarPoint cur = p;
    std::uint32_t k = 0;
    while (R - cur.r > absorb && k < kMcStepCap) {
      cur = walk_on_spheres_step(R, cur, rng);
      ++k;
    }
    // absorbed: project radially onto the boundary
    out.exit_angle[i] = wrap_angle(cur.theta);
    out.steps[i] = k;
    out.exited[i] = (R - cur.r <= absorb) ? 1 : 0;
  }
}

void run_euler_maruyama(const McConfig& cfg, double R, PolarPoint p, long first,
                        long count, PathOutputs& out) {
  const Vec2 start = to_cartesian(p);
  detail::em_run_paths(cfg.seed, first, count, start.x, start.y, R, cfg.dt,
                       kMcStepCap, out.exit_angle.data() + first,
                       out.steps.data() + first, out.exited.data() + first);
  for (long i = first; i < first + count; ++i) {
    if (out.exited[i]) out.exit_angle[i] = wrap_angle(out.exit_angle[i]);
  }
}

void validate(const McConfig& cfg, double R, PolarPoint p, int threads) {
  if (cfg.n_paths < 1) throw InvalidArgument("n_paths must be >= 1");
  if (!(cfg.eps_shell > 0.0) || cfg.eps_shell > 0.1) {
    throw InvalidArgument("eps_shell must lie in (0, 0.1]");
  }
  if (!(cfg.dt > 0.0)) throw InvalidArgument("dt must be positive");
  if (threads < 1) throw InvalidArgument("threads must be >= 1");
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw InvalidArgument("radius must be positive and finite");
  }
  if (!(p.r >= 0.0) || !std::isfinite(p.r) || !std::isfinite(p.theta)) {
    throw InvalidArgument("start point must be finite with r >= 0");
  }
  if (p.r >= R) {
    throw DomainError("mc_solve: start point must lie strictly inside the disc");
  }
}

}  // namespace

McEstimate mc_solve(const BoundarySpec& spec, double R, PolarPoint p,
                    const McConfig& cfg, int threads,
                    std::vector<double>* exit_angles) {
  validate(cfg, R, p, threads);

  const long n = cfg.n_paths;
  PathOutputs out;
  out.exit_angle.assign(static_cast<std::size_t>(n), 0.0);
  out.steps.assign(static_cast<std::size_t>(n), 0);
  out.exited.assign(static_cast<std::size_t>(n), 0);

  auto run_range = [&](long first, long count) {
    switch (cfg.method) {
      case McMethod::ExactExit:
        run_exact_exit(cfg, R, p, first, count, out);
        break;
      case McMethod::WalkOnSpheres:
        run_walk_on_spheres(cfg, R, p, first, count, out);
        break;
      case McMethod::EulerMaruyama:
        run_euler_maruyama(cfg, R, p, first, count, out);
        break;
    }
  };

  const int workers = static_cast<int>(std::min<long>(threads, n));
  if (workers <= 1) {
    run_range(0, n);
  } else {
    // Contiguous chunks; per-path streams make the partition immaterial to
    // the results.
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const long first = static_cast<long>(w) * chunk;
      const long count = std::min(chunk, n - first);
      if (count <= 0) break;
      pool.emplace_back(run_range, first, count);
    }
    for (auto& t : pool) t.join();
  }

  // Deterministic reduction: boundary values of contributing paths in path
  // order, pairwise-summed.
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n));
  std::uint64_t total_steps = 0;
  long abandoned = 0;
  for (long i = 0; i < n; ++i) {
    total_steps += out.steps[static_cast<std::size_t>(i)];
    if (!out.exited[static_cast<std::size_t>(i)]) {
      ++abandoned;
      continue;
    }
    values.push_back(eval_boundary(spec, out.exit_angle[static_cast<std::size_t>(i)]));
  }
  if (values.empty()) {
    throw ConvergenceError("mc_solve: all " + std::to_string(n) +
                           " paths exceeded the step cap of " +
                           std::to_string(kMcStepCap) + " steps");
  }

  McEstimate est;
  est.seed = cfg.seed;
  est.n_paths = static_cast<long>(values.size());
  est.abandoned_paths = abandoned;
  est.mean_steps =
      static_cast<double>(total_steps) / static_cast<double>(cfg.n_paths);
  est.mean = pairwise_sum(values) / static_cast<double>(values.size());

  if (values.size() > 1) {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double d = values[i] - est.mean;
      sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(values.size() - 1);
    est.std_error = std::sqrt(var / static_cast<double>(values.size()));
  }

  if (exit_angles) {
    exit_angles->clear();
    exit_angles->reserve(values.size());
    for (long i = 0; i < n; ++i) {
      if (out.exited[static_cast<std::size_t>(i)]) {
        exit_angles->push_back(out.exit_angle[static_cast<std::size_t>(i)]);
      }
    }
  }
  return est;
}

}  // namespace disclap
