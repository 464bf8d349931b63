// Lane-batched Euler-Maruyama stepper. This translation unit is compiled
// with vector-math flags (see core/CMakeLists.txt): splitting the per-step
// work into flat loops over lanes lets the compiler use the SIMD variants of
// log/sin/cos, which dominate the step cost. All quantities stay finite by
// construction (u1 is drawn from (0, 1]), so the relaxed math mode never
// meets a NaN or infinity.

#include "em_kernel.hpp"

#include <cmath>

#include "disclap/rng.hpp"

namespace disclap::detail {

namespace {

constexpr int kLanes = 128;

inline std::uint64_t lane_state(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed) + (stream << 32) * kGolden;
}

inline double draw_unit(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= (z >> 31);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

void em_run_paths(std::uint64_t seed, long first_path, long count,
                  double start_x, double start_y, double R, double dt,
                  std::uint32_t step_cap, double* exit_angles,
                  std::uint32_t* steps, std::uint8_t* exited) {
  if (count <= 0) return;

  alignas(64) std::uint64_t rs[kLanes];
  alignas(64) double x[kLanes], y[kLanes];
  alignas(64) double u1[kLanes], u2[kLanes], rho[kLanes], ca[kLanes], sa[kLanes];
  long pid[kLanes];
  std::uint32_t st[kLanes];

  const double r2_limit = R * R;
  const double minus_two_dt = -2.0 * dt;
  long next = first_path;
  const long end = first_path + count;
  int active = 0;

  auto load_lane = [&](int i, long path) {
    rs[i] = lane_state(seed, static_cast<std::uint64_t>(path));
    x[i] = start_x;
    y[i] = start_y;
    pid[i] = path;
    st[i] = 0;
  };

  while (active < kLanes && next < end) load_lane(active++, next++);

  while (active > 0) {
    for (int i = 0; i < active; ++i) {
      std::uint64_t z = (rs[i] += kGolden);
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      z ^= (z >> 31);
      u1[i] = static_cast<double>((z >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    }
    for (int i = 0; i < active; ++i) {
      u2[i] = draw_unit(rs[i]) * kTwoPi;
    }
    for (int i = 0; i < active; ++i) rho[i] = std::sqrt(minus_two_dt * std::log(u1[i]));
    for (int i = 0; i < active; ++i) ca[i] = std::cos(u2[i]);
    for (int i = 0; i < active; ++i) sa[i] = std::sin(u2[i]);
    for (int i = 0; i < active; ++i) {
      x[i] += rho[i] * ca[i];
      y[i] += rho[i] * sa[i];
      st[i] += 1;
    }

    for (int i = 0; i < active;) {
      const bool out = x[i] * x[i] + y[i] * y[i] >= r2_limit;
      if (!out && st[i] < step_cap) {
        ++i;
        continue;
      }
      const long rel = pid[i] - first_path;
      // overshoot is projected radially onto the circle: the exit angle is
      // the angle of the overshot position
      exit_angles[rel] = out ? std::atan2(y[i], x[i]) : 0.0;
      steps[rel] = st[i];
      exited[rel] = out ? 1 : 0;
      if (next < end) {
        load_lane(i, next++);
        ++i;
      } else {
        const int last = --active;
        if (i != last) {
          rs[i] = rs[last];
          x[i] = x[last];
          y[i] = y[last];
          pid[i] = pid[last];
          st[i] = st[last];
        }
        // the moved lane is re-examined at slot i
      }
    }
  }
}

}  // namespace disclap::detail
