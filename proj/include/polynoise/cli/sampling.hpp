#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "polynoise/f32.hpp"

namespace polynoise::cli {

/// SplitMix64 output function (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Counter-based uniform variate in [0, 1) with 24 random bits, so the
/// value is exact in binary32. Sample `index`, coordinate `axis` always
/// maps to the same number regardless of evaluation order.
inline float uniformUnit(std::uint64_t seed, std::uint64_t index, int axis) {
  const std::uint64_t bits = splitmix64(splitmix64(seed) ^ (index * 4 + static_cast<std::uint64_t>(axis)));
  return static_cast<float>(bits >> 40) * (1.0f / 16777216.0f);
}

/// Uniform point in [lo, hi)^4; callers ignore unused coordinates.
inline Vec4 samplePoint(std::uint64_t seed, std::uint64_t index, float lo, float hi) {
  const float span = hi - lo;
  return {lo + span * uniformUnit(seed, index, 0), lo + span * uniformUnit(seed, index, 1),
          lo + span * uniformUnit(seed, index, 2), lo + span * uniformUnit(seed, index, 3)};
}

/// Runs work(block) for every block in [0, blockCount) on up to `threads`
/// workers. Callers write per-block results into preallocated slots and
/// merge them in block order, which keeps reductions independent of the
/// thread count.
void parallelBlocks(std::size_t blockCount, int threads,
                    const std::function<void(std::size_t)>& work);

}  // namespace polynoise::cli
