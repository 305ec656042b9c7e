#pragma once

// Strict binary32 building blocks with GLSL built-in semantics.
//
// Everything in the noise core is composed from these functions. The
// library is compiled with -ffp-contract=off so that a*b + c is always two
// rounded operations; do not reintroduce fused or reassociated arithmetic
// here.

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace polynoise {

struct Vec2 {
  float x = 0.0f;
  float y = 0.0f;
};

struct Vec3 {
  float x = 0.0f;
  float y = 0.0f;
  float z = 0.0f;
};

struct Vec4 {
  float x = 0.0f;
  float y = 0.0f;
  float z = 0.0f;
  float w = 0.0f;
};

/// Largest integer-valued float not greater than x.
///
/// Every float with magnitude >= 2^23 is already an integer, so the
/// truncating conversion below is only taken where it is exact.
inline float floor32(float x) {
  constexpr float kIntegral = 8388608.0f;  // 2^23
  if (!(x > -kIntegral && x < kIntegral)) return x;
  const float t = static_cast<float>(static_cast<std::int32_t>(x));
  return t > x ? t - 1.0f : t;
}

inline float fract32(float x) { return x - floor32(x); }

/// GLSL mod(): x - y * floor(x / y). The result takes the sign of y.
inline float mod32(float x, float y) {
  if (y == 0.0f) throw std::domain_error("mod32: zero modulus");
  return x - y * floor32(x / y);
}

/// 0.0 if x < edge, else 1.0.
inline float step32(float edge, float x) { return x < edge ? 0.0f : 1.0f; }

inline float abs32(float x) { return std::fabs(x); }

inline float max32(float a, float b) { return a < b ? b : a; }

inline float min32(float a, float b) { return b < a ? b : a; }

// round(x) is not available in GLSL 1.20; the listings use floor(x + 0.5).
inline float roundHalfUp32(float x) { return floor32(x + 0.5f); }

inline float sign32(float x) {
  return x > 0.0f ? 1.0f : (x < 0.0f ? -1.0f : 0.0f);
}

/// GLSL mix(): a * (1 - t) + b * t.
inline float mix32(float a, float b, float t) {
  return a * (1.0f - t) + b * t;
}

// Dot products accumulate left to right in component order.
inline float dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline float dot(Vec3 a, Vec3 b) { return (a.x * b.x + a.y * b.y) + a.z * b.z; }
inline float dot(Vec4 a, Vec4 b) {
  return ((a.x * b.x + a.y * b.y) + a.z * b.z) + a.w * b.w;
}

}  // namespace polynoise
