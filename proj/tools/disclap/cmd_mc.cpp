#include <fstream>
#include <memory>

#include "commands.hpp"

#include "disclap/errors.hpp"
#include "disclap/solution_io.hpp"
#include "disclap/stochastic.hpp"
#include "cli_common.hpp"
#include "json_out.hpp"

namespace cli {

namespace {

struct McArgs {
  BoundaryFlags boundary;
  double radius = 1.0;
  std::string point;
  long paths = 100000;
  std::uint64_t seed = 0;
  std::string method = "exact";
  double eps_shell = 1e-4;
  double dt = 1e-5;
  int threads = 1;
  std::string dump_exits;
};

void run_mc(const McArgs& a) {
  const auto spec = a.boundary.resolve();
  disclap::McConfig cfg;
  cfg.n_paths = a.paths;
  cfg.seed = a.seed;
  cfg.eps_shell = a.eps_shell;
  cfg.dt = a.dt;
  if (a.method == "exact") {
    cfg.method = disclap::McMethod::ExactExit;
  } else if (a.method == "wos") {
    cfg.method = disclap::McMethod::WalkOnSpheres;
  } else if (a.method == "em") {
    cfg.method = disclap::McMethod::EulerMaruyama;
  } else {
    throw disclap::InvalidArgument("unknown method \"" + a.method +
                                   "\"; expected exact, wos or em");
  }

  std::vector<double> exits;
  const auto est =
      disclap::mc_solve(spec, a.radius, parse_point(a.point), cfg, a.threads,
                        a.dump_exits.empty() ? nullptr : &exits);

  if (!a.dump_exits.empty()) {
    std::ofstream out(a.dump_exits);
    if (!out) throw disclap::IoError("cannot open " + a.dump_exits + " for writing");
    out << "exit_angle\n";
    for (double phi : exits) out << disclap::format_double17(phi) << '\n';
    if (!out) throw disclap::IoError("write failed: " + a.dump_exits);
  }

  emit_json({{"schema", "1"},
             {"command", "mc"},
             {"method", disclap::mc_method_name(cfg.method)},
             {"mean", est.mean},
             {"std_error", est.std_error},
             {"n_paths", est.n_paths},
             {"mean_steps", est.mean_steps},
             {"seed", est.seed},
             {"abandoned_paths", est.abandoned_paths}});
}

}  // namespace

void register_mc(CLI::App& app) {
  auto args = std::make_shared<McArgs>();
  auto* cmd = app.add_subcommand(
      "mc", "Monte Carlo estimate of u at one interior point");
  args->boundary.attach(*cmd);
  cmd->add_option("--R", args->radius, "disc radius")->required();
  cmd->add_option("--point", args->point, "start point r,theta (radians)")
      ->required();
  cmd->add_option("--paths", args->paths, "number of simulated paths");
  cmd->add_option("--seed", args->seed, "RNG seed (no random default)")
      ->required();
  cmd->add_option("--method", args->method, "exact | wos | em");
  cmd->add_option("--eps-shell", args->eps_shell,
                  "WoS absorption distance as a fraction of R");
  cmd->add_option("--dt", args->dt, "Euler-Maruyama time step");
  cmd->add_option("--threads", args->threads,
                  "worker threads (estimate is independent of this)");
  cmd->add_option("--dump-exits", args->dump_exits,
                  "write exit angles of contributing paths to a CSV file");
  cmd->callback([args] { run_mc(*args); });
}

}  // namespace cli
