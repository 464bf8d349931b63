#pragma once

#include <CLI11.hpp>

namespace cli {

/// Thrown by `validate` when a check fails; main maps it to exit code 1
/// after the JSON report has already been emitted.
struct ValidationFailure {};

void register_solve(CLI::App& app);
void register_mc(CLI::App& app);
void register_inpaint(CLI::App& app);
void register_denoise(CLI::App& app);
void register_upsample(CLI::App& app);
void register_validate(CLI::App& app);

}  // namespace cli
