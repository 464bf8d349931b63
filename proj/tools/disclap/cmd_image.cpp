#include <memory>
#include <vector>

#include "commands.hpp"

#include "disclap/errors.hpp"
#include "disclap/imaging.hpp"
#include "disclap/netpbm.hpp"
#include "json_out.hpp"

namespace cli {

namespace {

bool is_ppm(const std::string& path) {
  const auto kind = disclap::probe_netpbm(path);
  return kind == disclap::NetpbmKind::PpmAscii ||
         kind == disclap::NetpbmKind::PpmBinary;
}

nlohmann::json report_json(const disclap::SolveReport& r) {
  return {{"iterations", r.iterations},
          {"final_residual", r.final_residual},
          {"converged", r.converged},
          {"method", r.method}};
}

// --- inpaint ----------------------------------------------------------------

struct InpaintArgs {
  std::string image, mask, out;
  double tol = disclap::kGridDefaultTol;
  long max_iters = disclap::kGridDefaultMaxIters;
  std::string method = "sor";
  double omega = 0.0;  // 0 = auto
};

disclap::InpaintConfig make_config(const InpaintArgs& a, int width, int height) {
  disclap::InpaintConfig cfg;
  cfg.tol = a.tol;
  cfg.max_iters = a.max_iters;
  if (a.method == "jacobi") {
    cfg.method = disclap::SolveMethod::jacobi();
  } else if (a.method == "gs") {
    cfg.method = disclap::SolveMethod::gauss_seidel();
  } else if (a.method == "sor") {
    cfg.method = disclap::SolveMethod::sor(
        a.omega > 0.0 ? a.omega
                      : disclap::sor_auto_omega(std::max(width, height)));
  } else {
    throw disclap::InvalidArgument("unknown method \"" + a.method +
                                   "\"; expected jacobi, gs or sor");
  }
  return cfg;
}

int run_inpaint(const InpaintArgs& a) {
  const auto mask = disclap::read_mask_pgm(a.mask);
  nlohmann::json out = {{"schema", "1"}, {"command", "inpaint"}, {"out", a.out}};
  auto& channels = out["channels"] = nlohmann::json::array();
  bool all_converged = true;

  if (is_ppm(a.image)) {
    const auto rgb = disclap::read_ppm(a.image);
    const auto cfg = make_config(a, rgb.r.width, rgb.r.height);
    disclap::RgbImage result;
    disclap::ImageGrid* dst[3] = {&result.r, &result.g, &result.b};
    const disclap::ImageGrid* src[3] = {&rgb.r, &rgb.g, &rgb.b};
    for (int c = 0; c < 3; ++c) {
      auto [img, report] = disclap::inpaint(*src[c], mask, cfg);
      *dst[c] = std::move(img);
      all_converged = all_converged && report.converged;
      channels.push_back(report_json(report));
    }
    disclap::write_ppm(result, a.out);
  } else {
    const auto img = disclap::read_pgm(a.image);
    const auto cfg = make_config(a, img.width, img.height);
    auto [result, report] = disclap::inpaint(img, mask, cfg);
    all_converged = report.converged;
    channels.push_back(report_json(report));
    disclap::write_pgm(result, a.out);
  }
  out["converged"] = all_converged;
  emit_json(out);
  return all_converged ? 0 : 4;
}

// --- denoise ----------------------------------------------------------------

struct DenoiseArgs {
  std::string image, out;
  int steps = 50;
  double step_size = 0.2;
};

void run_denoise(const DenoiseArgs& a) {
  nlohmann::json out = {{"schema", "1"},
                        {"command", "denoise"},
                        {"steps", a.steps},
                        {"step_size", a.step_size},
                        {"out", a.out}};
  double e0 = 0.0, e1 = 0.0;
  if (is_ppm(a.image)) {
    const auto rgb = disclap::read_ppm(a.image);
    disclap::RgbImage result;
    disclap::ImageGrid* dst[3] = {&result.r, &result.g, &result.b};
    const disclap::ImageGrid* src[3] = {&rgb.r, &rgb.g, &rgb.b};
    for (int c = 0; c < 3; ++c) {
      e0 += disclap::dirichlet_energy(*src[c]);
      *dst[c] = disclap::denoise(*src[c], a.steps, a.step_size);
      e1 += disclap::dirichlet_energy(*dst[c]);
    }
    disclap::write_ppm(result, a.out);
  } else {
    const auto img = disclap::read_pgm(a.image);
    e0 = disclap::dirichlet_energy(img);
    const auto result = disclap::denoise(img, a.steps, a.step_size);
    e1 = disclap::dirichlet_energy(result);
    disclap::write_pgm(result, a.out);
  }
  out["energy_initial"] = e0;
  out["energy_final"] = e1;
  emit_json(out);
}

// --- upsample ---------------------------------------------------------------

struct UpsampleArgs {
  std::string image, out;
  int factor = 2;
};

void run_upsample(const UpsampleArgs& a) {
  nlohmann::json out = {{"schema", "1"},
                        {"command", "upsample"},
                        {"factor", a.factor},
                        {"out", a.out}};
  if (is_ppm(a.image)) {
    const auto rgb = disclap::read_ppm(a.image);
    const disclap::RgbImage result{disclap::upsample_harmonic(rgb.r, a.factor),
                                   disclap::upsample_harmonic(rgb.g, a.factor),
                                   disclap::upsample_harmonic(rgb.b, a.factor)};
    out["width"] = result.r.width;
    out["height"] = result.r.height;
    disclap::write_ppm(result, a.out);
  } else {
    const auto result =
        disclap::upsample_harmonic(disclap::read_pgm(a.image), a.factor);
    out["width"] = result.width;
    out["height"] = result.height;
    disclap::write_pgm(result, a.out);
  }
  emit_json(out);
}

}  // namespace

void register_inpaint(CLI::App& app) {
  auto args = std::make_shared<InpaintArgs>();
  auto* cmd = app.add_subcommand(
      "inpaint", "fill masked-out pixels harmonically from the known ones");
  cmd->add_option("--image", args->image, "input PGM/PPM image")->required();
  cmd->add_option("--mask", args->mask,
                  "PGM mask: 0 = unknown (fill), 255 = known (keep)")
      ->required();
  cmd->add_option("--out", args->out, "output image path")->required();
  cmd->add_option("--tol", args->tol, "stencil-residual tolerance");
  cmd->add_option("--max-iters", args->max_iters, "iteration cap");
  cmd->add_option("--method", args->method, "jacobi | gs | sor");
  cmd->add_option("--omega", args->omega, "SOR relaxation (default: auto)");
  cmd->callback([args] {
    if (int code = run_inpaint(*args); code != 0) {
      throw disclap::ConvergenceError("inpaint did not converge within --max-iters");
    }
  });
}

void register_denoise(CLI::App& app) {
  auto args = std::make_shared<DenoiseArgs>();
  auto* cmd = app.add_subcommand(
      "denoise", "smooth an image by descending its Dirichlet energy");
  cmd->add_option("--image", args->image, "input PGM/PPM image")->required();
  cmd->add_option("--out", args->out, "output image path")->required();
  cmd->add_option("--steps", args->steps, "diffusion steps");
  cmd->add_option("--step-size", args->step_size, "step size in (0, 0.25]");
  cmd->callback([args] { run_denoise(*args); });
}

void register_upsample(CLI::App& app) {
  auto args = std::make_shared<UpsampleArgs>();
  auto* cmd = app.add_subcommand(
      "upsample", "enlarge an image, filling between samples harmonically");
  cmd->add_option("--image", args->image, "input PGM/PPM image")->required();
  cmd->add_option("--out", args->out, "output image path")->required();
  cmd->add_option("--factor", args->factor, "integer upsampling factor >= 1");
  cmd->callback([args] { run_upsample(*args); });
}

}  // namespace cli
