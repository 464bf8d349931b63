// disclap: Dirichlet solvers for the Laplace equation on a disc, plus
// harmonic image workflows (inpaint, denoise, upsample).
//
// Output contract: stdout carries exactly one JSON document per successful
// run, stderr carries human-readable messages. Exit codes: 0 success,
// 1 validate reported FAIL, 2 bad arguments or unreadable input, 3 domain
// errors, 4 non-convergence.

#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "disclap/errors.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Laplace-equation solvers on the disc and harmonic imaging tools"};
  app.require_subcommand(1);

  cli::register_solve(app);
  cli::register_mc(app);
  cli::register_inpaint(app);
  cli::register_denoise(app);
  cli::register_upsample(app);
  cli::register_validate(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const cli::ValidationFailure&) {
    return 1;
  } catch (const disclap::DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 3;
  } catch (const disclap::ConvergenceError& e) {
    std::fprintf(stderr, "non-convergence: %s\n", e.what());
    return 4;
  } catch (const disclap::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return 0;
}
