#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>

#include "polynoise/f32.hpp"

using namespace polynoise;

TEST_CASE("floor32 examples") {
  CHECK(floor32(1.5f) == 1.0f);
  CHECK(floor32(-0.25f) == -1.0f);
  CHECK(floor32(2.0f) == 2.0f);
  CHECK(floor32(-2.0f) == -2.0f);
  CHECK(floor32(-0.0f) == 0.0f);
  CHECK(floor32(16777215.0f) == 16777215.0f);
  CHECK(floor32(-8388607.5f) == -8388608.0f);
}

TEST_CASE("fract32 examples") {
  CHECK(fract32(-0.25f) == 0.75f);
  CHECK(fract32(3.0f) == 0.0f);
  CHECK(fract32(1.5f) == 0.5f);
}

TEST_CASE("mod32 follows the sign of the divisor") {
  CHECK(mod32(-1.0f, 289.0f) == 288.0f);
  CHECK(mod32(289.0f, 289.0f) == 0.0f);
  CHECK(mod32(290.0f, 289.0f) == 1.0f);
  CHECK(mod32(1.0f, -3.0f) == -2.0f);
  CHECK_THROWS_AS(mod32(1.0f, 0.0f), std::domain_error);
}

TEST_CASE("step32 returns 1 on equality") {
  CHECK(step32(0.5f, 0.4f) == 0.0f);
  CHECK(step32(0.5f, 0.5f) == 1.0f);
  CHECK(step32(0.5f, 0.6f) == 1.0f);
}

TEST_CASE("elementwise helpers") {
  CHECK(dot(Vec2{1, 2}, Vec2{3, 4}) == 11.0f);
  CHECK(dot(Vec3{1, 2, 3}, Vec3{4, 5, 6}) == 32.0f);
  CHECK(dot(Vec4{1, 2, 3, 4}, Vec4{1, 1, 1, 1}) == 10.0f);
  CHECK(floor32(0.5f + 0.5f) == 1.0f);
  CHECK(roundHalfUp32(0.5f) == 1.0f);
  CHECK(roundHalfUp32(-0.5f) == 0.0f);
  CHECK(abs32(-0.5f) == 0.5f);
  CHECK(max32(-1.0f, 0.0f) == 0.0f);
  CHECK(sign32(-3.0f) == -1.0f);
  CHECK(sign32(0.0f) == 0.0f);
  CHECK(mix32(2.0f, 4.0f, 0.0f) == 2.0f);
  CHECK(mix32(2.0f, 4.0f, 1.0f) == 4.0f);
}

TEST_CASE("dot accumulates left to right") {
  // (1e8 + -1e8) + 1 = 1, whereas 1e8 + (-1e8 + 1) would give 0.
  CHECK(dot(Vec3{1e8f, -1e8f, 1.0f}, Vec3{1, 1, 1}) == 1.0f);
}

TEST_CASE("floor32 and fract32 agree with the C library on random floats") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200000; ++k) {
    const float x = std::bit_cast<float>(static_cast<std::uint32_t>(rng()));
    if (!std::isfinite(x)) continue;
    REQUIRE(floor32(x) == std::floor(x));
    if (std::fabs(x) < 1e6f) {
      const float f = fract32(x);
      // x - floor(x) rounds to exactly 1 for tiny negative x, as in GLSL.
      REQUIRE(f >= 0.0f);
      REQUIRE(f <= 1.0f);
      REQUIRE(f == x - std::floor(x));
    }
  }
}

TEST_CASE("mod32 lands in [0, y) for integer operands") {
  // With |x / y| < 2^12 and y < 2^12 the quotient's ulp is below 1/y, so it
  // never rounds across an integer and the result is exact.
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int32_t> modulus(1, 1000);
  for (int k = 0; k < 200000; ++k) {
    const std::int32_t y = modulus(rng);
    std::uniform_int_distribution<std::int32_t> value(-4095 * y, 4095 * y);
    const std::int32_t x = value(rng);
    const float r = mod32(static_cast<float>(x), static_cast<float>(y));
    REQUIRE(r >= 0.0f);
    REQUIRE(r < static_cast<float>(y));
    REQUIRE(r == static_cast<float>(((x % y) + y) % y));
  }
}
