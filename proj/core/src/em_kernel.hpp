#pragma once

#include <cstdint>

namespace disclap::detail {

/// Run Euler-Maruyama paths [first_path, first_path + count) of the stream
/// family `seed`, all starting at (start_x, start_y), stopping on first exit
/// from the disc of radius R or after step_cap steps.
///
/// Results are written per path (relative to first_path): the exit angle,
/// the step count, and whether the path actually exited (0 = abandoned).
/// Output depends only on (seed, path index); the batched execution order
/// inside is an implementation detail.
void em_run_paths(std::uint64_t seed, long first_path, long count,
                  double start_x, double start_y, double R, double dt,
                  std::uint32_t step_cap, double* exit_angles,
                  std::uint32_t* steps, std::uint8_t* exited);

}  // namespace disclap::detail
