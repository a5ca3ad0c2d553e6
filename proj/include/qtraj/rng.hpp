#pragma once

#include <cstdint>

namespace qtraj {

// Counter-based uniform stream: every draw is a pure function of
// (seed, trajectory, step), so ensembles reproduce bit-identically no matter
// how the work is scheduled.
//
// mix64 is the splitmix64 finalizer; a draw chains two rounds keyed by the
// golden-gamma constant:
//   h = mix64(seed + GAMMA * (trajectory + 1))
//   u = mix64(h + GAMMA * (step + 1)) -> [0, 1) via the top 53 bits.
inline constexpr std::uint64_t GOLDEN_GAMMA = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t x) {
  x += GOLDEN_GAMMA;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t draw_bits(std::uint64_t seed, std::uint64_t trajectory,
                               std::uint64_t step) {
  const std::uint64_t h = mix64(seed + GOLDEN_GAMMA * (trajectory + 1));
  return mix64(h + GOLDEN_GAMMA * (step + 1));
}

inline double uniform01(std::uint64_t seed, std::uint64_t trajectory,
                        std::uint64_t step) {
  return static_cast<double>(draw_bits(seed, trajectory, step) >> 11) * 0x1.0p-53;
}

// Small stateful wrapper for test-local sampling (not used by the engine).
struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_bits() { return mix64(state++); }
  double next01() { return static_cast<double>(next_bits() >> 11) * 0x1.0p-53; }
};

}  // namespace qtraj
