#include <cmath>
#include <memory>
#include <vector>

#include "commands.hpp"

#include "disclap/errors.hpp"
#include "disclap/netpbm.hpp"
#include "disclap/poisson.hpp"
#include "disclap/spectral.hpp"
#include "disclap/stochastic.hpp"
#include "cli_common.hpp"
#include "json_out.hpp"

namespace cli {

namespace {

struct SolveArgs {
  BoundaryFlags boundary;
  double radius = 1.0;
  std::vector<std::string> points;
  std::string grid;
  std::string method = "spectral";
  int n_max = disclap::kDefaultTruncation;
  bool n_max_set = false;
  int quad_points = disclap::kDefaultQuadPoints;
  // mc passthrough
  long paths = 100000;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string mc_method = "exact";
  double eps_shell = 1e-4;
  double dt = 1e-5;
  int threads = 1;
  // rendering
  std::string render_path;
  int render_size = 256;
};

disclap::McMethod parse_mc_method(const std::string& name) {
  if (name == "exact") return disclap::McMethod::ExactExit;
  if (name == "wos") return disclap::McMethod::WalkOnSpheres;
  if (name == "em") return disclap::McMethod::EulerMaruyama;
  throw disclap::InvalidArgument("unknown mc method \"" + name +
                                 "\"; expected exact, wos or em");
}

void render_pgm(const SolveArgs& a, const disclap::BoundarySpec& spec,
                const disclap::DiscSolution& sol, nlohmann::json& out) {
  const int n = a.render_size;
  if (n < 2) throw disclap::InvalidArgument("--render-size must be >= 2");
  const double R = a.radius;
  auto img = disclap::ImageGrid::filled(n, n, 0.0);
  std::vector<double> values(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<std::uint8_t> inside(static_cast<std::size_t>(n) * n, 0);

  double vmin = 0.0, vmax = 0.0;
  bool seen = false;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = -R + 2.0 * R * (i + 0.5) / n;
      const double y = R - 2.0 * R * (j + 0.5) / n;  // top row = +y
      const auto p = disclap::to_polar(x, y);
      if (p.r > R) continue;
      const double v = (a.method == "poisson")
                           ? disclap::solve_poisson(spec, R, p, a.quad_points)
                           : disclap::eval_solution(sol, p);
      const auto idx = static_cast<std::size_t>(j) * n + i;
      values[idx] = v;
      inside[idx] = 1;
      vmin = seen ? std::min(vmin, v) : v;
      vmax = seen ? std::max(vmax, v) : v;
      seen = true;
    }
  }
  const double scale = (vmax > vmin) ? 1.0 / (vmax - vmin) : 0.0;
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    img.pixels[idx] = inside[idx] ? (scale > 0.0 ? (values[idx] - vmin) * scale : 0.5)
                                  : 0.0;
  }
  disclap::write_pgm(img, a.render_path);
  out["render"] = {{"file", a.render_path},
                   {"size", n},
                   {"vmin", vmin},
                   {"vmax", vmax}};
}

void run_solve(const SolveArgs& a) {
  const auto spec = a.boundary.resolve();
  if (a.method != "spectral" && a.method != "poisson" && a.method != "mc") {
    throw disclap::InvalidArgument("unknown method \"" + a.method +
                                   "\"; expected spectral, poisson or mc");
  }
  if (a.points.empty() && a.grid.empty()) {
    throw disclap::InvalidArgument("pass at least one --point or a --grid");
  }
  if (a.method == "mc" && !a.seed_set) {
    throw disclap::InvalidArgument("--method mc requires --seed");
  }
  if (!a.render_path.empty() && a.grid.empty()) {
    throw disclap::InvalidArgument("--render needs --grid mode");
  }
  if (!a.render_path.empty() && a.method == "mc") {
    throw disclap::InvalidArgument("--render supports spectral and poisson only");
  }

  // default truncation respects the Nyquist limit of sampled data; an
  // explicit --n-max beyond it stays an error
  int n_max = a.n_max;
  if (!a.n_max_set && !spec.is_closed_form()) {
    const int nyquist = static_cast<int>(spec.samples().size()) / 2 - 1;
    n_max = std::min(n_max, nyquist);
  }

  // the spectral solution doubles as the cross-check reference for poisson
  const auto sol = disclap::solve_spectral(spec, a.radius, n_max);

  std::vector<disclap::PolarPoint> eval_points;
  for (const auto& text : a.points) eval_points.push_back(parse_point(text));
  if (!a.grid.empty()) {
    const auto [nr, nt] = parse_grid(a.grid);
    for (int i = 0; i < nr; ++i) {
      for (int j = 0; j < nt; ++j) {
        eval_points.push_back({a.radius * (i + 1) / (nr + 1),
                               disclap::kTwoPi * j / nt});
      }
    }
  }

  nlohmann::json out = {{"schema", "1"},
                        {"command", "solve"},
                        {"method", a.method},
                        {"R", a.radius},
                        {"n_max", n_max}};
  auto& points = out["points"] = nlohmann::json::array();

  for (const auto& p : eval_points) {
    nlohmann::json entry = {{"r", p.r}, {"theta", p.theta}};
    if (a.method == "spectral") {
      entry["value"] = disclap::eval_solution(sol, p);
    } else if (a.method == "poisson") {
      const double v = disclap::solve_poisson(spec, a.radius, p, a.quad_points);
      entry["value"] = v;
      entry["quad_points"] = disclap::effective_quad_points(a.radius, p, a.quad_points);
      entry["spectral_delta"] = v - disclap::eval_solution(sol, p);
    } else {
      disclap::McConfig cfg;
      cfg.n_paths = a.paths;
      cfg.seed = a.seed;
      cfg.method = parse_mc_method(a.mc_method);
      cfg.eps_shell = a.eps_shell;
      cfg.dt = a.dt;
      const auto est = disclap::mc_solve(spec, a.radius, p, cfg, a.threads);
      entry["value"] = est.mean;
      entry["std_error"] = est.std_error;
      entry["n_paths"] = est.n_paths;
      entry["mean_steps"] = est.mean_steps;
      entry["seed"] = est.seed;
    }
    points.push_back(std::move(entry));
  }

  if (!a.render_path.empty()) render_pgm(a, spec, sol, out);
  emit_json(out);
}

}  // namespace

void register_solve(CLI::App& app) {
  auto args = std::make_shared<SolveArgs>();
  auto* cmd = app.add_subcommand(
      "solve", "evaluate the disc Dirichlet solution at points or on a grid");
  args->boundary.attach(*cmd);
  cmd->add_option("--R", args->radius, "disc radius")->required();
  cmd->add_option("--point", args->points,
                  "evaluation point r,theta (radians); repeatable");
  cmd->add_option("--grid", args->grid,
                  "interior polar grid NR,NT: r_i = R(i+1)/(NR+1), "
                  "theta_j = 2pi j/NT");
  cmd->add_option("--method", args->method, "spectral | poisson | mc");
  cmd->add_option("--n-max", args->n_max,
                  "spectral truncation order (default 64, capped at the "
                  "Nyquist limit of sampled data)")
      ->trigger_on_parse()
      ->each([args](const std::string&) { args->n_max_set = true; });
  cmd->add_option("--quad-points", args->quad_points,
                  "Poisson quadrature points (auto-escalates near the boundary)");
  cmd->add_option("--paths", args->paths, "mc: number of paths");
  cmd->add_option("--seed", args->seed, "mc: RNG seed (required for mc)")
      ->trigger_on_parse()
      ->each([args](const std::string&) { args->seed_set = true; });
  cmd->add_option("--mc-method", args->mc_method, "mc: exact | wos | em");
  cmd->add_option("--eps-shell", args->eps_shell, "mc: WoS absorption shell");
  cmd->add_option("--dt", args->dt, "mc: Euler-Maruyama time step");
  cmd->add_option("--threads", args->threads, "mc: worker threads");
  cmd->add_option("--render", args->render_path,
                  "grid mode: write a PGM rendering of u over the disc");
  cmd->add_option("--render-size", args->render_size, "PGM edge length");
  cmd->callback([args] { run_solve(*args); });
}

}  // namespace cli
