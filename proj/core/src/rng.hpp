#pragma once

#include <cstdint>
#include <random>

namespace icsie::detail {

/// Uniform integer in [0, bound) from a 64-bit engine by rejection, so the
/// stream is the same on every platform (std::uniform_int_distribution is not).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace icsie::detail
