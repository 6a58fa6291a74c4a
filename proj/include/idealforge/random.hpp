#pragma once

#include <cstdint>
#include <random>

#include "idealforge/types.hpp"

namespace idealforge {

/// The one pseudo-random generator used across the library. Its output
/// sequence is fixed by the C++ standard, so seeded runs are reproducible on
/// every platform.
using Rng = std::mt19937_64;

/// Independent stream for trial `index` of a run seeded with `seed`.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

/// Uniform integer in [0, bound), bound > 0. Rejection sampling on raw words
/// (std::uniform_int_distribution is not portable bit-for-bit).
Int uniform_below(Rng& gen, const Int& bound);

/// Uniform integer in [lo, hi].
inline Int uniform_in(Rng& gen, const Int& lo, const Int& hi) { return lo + uniform_below(gen, hi - lo + 1); }

}  // namespace idealforge
