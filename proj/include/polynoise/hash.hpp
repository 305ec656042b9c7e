#pragma once

// Permutation-polynomial hashing of lattice coordinates.
//
// The classic 256-entry permutation table is replaced by the polynomial
// (34 x^2 + x) mod 289, evaluated entirely in binary32. Integers stay exact
// as long as every intermediate is below 2^24, which holds whenever the
// argument of permute() is below 579 (two reduced indices plus one).

#include <cassert>
#include <cstdint>
#include <vector>

#include "polynoise/f32.hpp"

namespace polynoise {

/// (A x^2 + B x) mod M over the residues {0, ..., M-1}.
struct PermutationPolynomial {
  std::uint64_t a = 34;
  std::uint64_t b = 1;
  std::uint64_t m = 289;
};

inline constexpr PermutationPolynomial kNoisePolynomial{34, 1, 289};
inline constexpr float kHashModulus = 289.0f;

/// Lattice coordinate reduced into [0, 289). Requires an integer-valued
/// input with |x| < 2^24.
inline float mod289(float x) {
  assert(x == floor32(x) && "mod289 expects an integer-valued float");
  // Below 289 * 2^12 the quotient's ulp is under 1/289, so x / 289 never
  // rounds across an integer and the shader formula is exact.
  constexpr float kDirectLimit = 289.0f * 4096.0f;
  if (abs32(x) < kDirectLimit) return mod32(x, kHashModulus);
  // Otherwise split x = 4096 high + low; every partial reduction then has a
  // small quotient. The power-of-two scaling is exact.
  const float high = floor32(x * (1.0f / 4096.0f));
  const float low = x - high * 4096.0f;
  const float highReduced = mod32(mod32(high, kHashModulus) * 4096.0f, kHashModulus);
  return mod32(highReduced + low, kHashModulus);
}

/// ((34 x + 1) x) mod 289, the shader formula. Exact for integer-valued
/// 0 <= x < 579; callers must pre-reduce with mod289 when x could be larger.
inline float permute(float x) {
  return mod32(((x * 34.0f) + 1.0f) * x, kHashModulus);
}

// Nested hashing, last coordinate first. Coordinates must already be
// reduced (an added corner offset of 0 or 1 is fine).
inline float hashCorner2(Vec2 i) { return permute(permute(i.y) + i.x); }

inline float hashCorner3(Vec3 i) {
  return permute(permute(permute(i.z) + i.y) + i.x);
}

inline float hashCorner4(Vec4 i) {
  return permute(permute(permute(permute(i.w) + i.z) + i.y) + i.x);
}

struct PermutationCheck {
  bool isBijection = false;
  std::vector<std::uint64_t> image;  // image[x] for x in [0, M)
};

/// Brute-force evaluation of a permutation polynomial with exact integer
/// arithmetic. Throws std::domain_error for M == 0 and
/// std::invalid_argument for M above 10^6.
PermutationCheck checkPermutationPolynomial(const PermutationPolynomial& p);

struct TruncationProbe {
  float f32Result = 0.0f;
  std::int64_t exactResult = 0;
  bool matches = false;
};

/// Evaluates (34 x^2 + x) mod 289 in binary32 without pre-reducing x and
/// compares against the exact integer value. Throws std::invalid_argument
/// for |x| >= 2^24.
TruncationProbe naivePermuteTruncationProbe(std::int64_t x);

}  // namespace polynoise
