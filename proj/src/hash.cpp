#include "polynoise/hash.hpp"

#include <stdexcept>

namespace polynoise {

namespace {

constexpr std::uint64_t kMaxBruteForceModulus = 1'000'000;
constexpr std::int64_t kExactFloatLimit = std::int64_t{1} << 24;

}  // namespace

PermutationCheck checkPermutationPolynomial(const PermutationPolynomial& p) {
  if (p.m == 0) throw std::domain_error("permutation polynomial: modulus is zero");
  if (p.m > kMaxBruteForceModulus) {
    throw std::invalid_argument("permutation polynomial: modulus too large to enumerate");
  }

  // Coefficients and x^2 are reduced first so every product stays below 10^12.
  const std::uint64_t a = p.a % p.m;
  const std::uint64_t b = p.b % p.m;

  PermutationCheck result;
  result.image.resize(p.m);
  std::vector<bool> seen(p.m, false);
  result.isBijection = true;
  for (std::uint64_t x = 0; x < p.m; ++x) {
    const std::uint64_t square = (x * x) % p.m;
    const std::uint64_t y = ((a * square) % p.m + (b * x) % p.m) % p.m;
    result.image[x] = y;
    if (seen[y]) result.isBijection = false;
    seen[y] = true;
  }
  return result;
}

TruncationProbe naivePermuteTruncationProbe(std::int64_t x) {
  if (x <= -kExactFloatLimit || x >= kExactFloatLimit) {
    throw std::invalid_argument("truncation probe: |x| must be below 2^24");
  }
  TruncationProbe probe;
  const float xf = static_cast<float>(x);
  probe.f32Result = mod32(((xf * 34.0f) + 1.0f) * xf, kHashModulus);

  const std::int64_t value = 34 * x * x + x;
  probe.exactResult = ((value % 289) + 289) % 289;
  probe.matches = static_cast<std::int64_t>(probe.f32Result) == probe.exactResult &&
                  probe.f32Result == floor32(probe.f32Result);
  return probe;
}

}  // namespace polynoise
