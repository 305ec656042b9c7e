#pragma once

// Gradients on cross-polytope boundaries.
//
// A hashed index picks an evenly spaced point in an (N-1)-cube, which is
// folded onto the boundary of the N-dimensional cross-polytope:
//   2-D: 41 points on a line  -> diamond, |gx| + |gy| = 0.5
//   3-D: 7x7 grid             -> octahedron, L1 norm 1
//   4-D: 7x7x6 grid           -> truncated 4-cross-polytope, L1 norm 1.5
// Grid sizes 41, 49 and 294 share no prime factor with 289.

#include "polynoise/f32.hpp"

namespace polynoise {

using Gradient2 = Vec2;
using Gradient3 = Vec3;
using Gradient4 = Vec4;

/// Diamond gradient, transcribed from the 2-D shader so that simplex
/// noise stays bit-identical to it. Note the index is scaled by the
/// binary32 reciprocal of 41, so h and h + 41 agree only to within an ulp.
inline Gradient2 grad2(float h) {
  const float x = fract32(h * (1.0f / 41.0f)) * 2.0f - 1.0f;
  const float gy = abs32(x) - 0.5f;
  const float gx = x - roundHalfUp32(x);
  return {gx, gy};
}

namespace detail {

// Cell centre of a k-point grid along one axis, mapped into [-1, 1].
inline float gridCoordinate(float index, float cells) {
  return (2.0f * index + 0.5f) / cells - 1.0f;
}

}  // namespace detail

inline Gradient3 grad3(float h) {
  const float k = mod32(h, 49.0f);
  const float a = floor32(k / 7.0f);
  const float b = k - 7.0f * a;
  const float u = detail::gridCoordinate(a, 7.0f);
  const float v = detail::gridCoordinate(b, 7.0f);
  const float z = (1.0f - abs32(u)) - abs32(v);
  if (z >= 0.0f) return {u, v, z};
  return {u - sign32(u), v - sign32(v), z};
}

/// Points outside the truncated region (w < 0) are reflected through the
/// nearest corner, as in the 3-D fold. Indices are taken mod 294, so only
/// 289 of the 294 gradients are reachable from a reduced hash.
inline Gradient4 grad4(float h) {
  const float k = mod32(h, 294.0f);
  const float c = floor32(k / 49.0f);
  const float r = k - 49.0f * c;
  const float a = floor32(r / 7.0f);
  const float b = r - 7.0f * a;
  const float u = detail::gridCoordinate(a, 7.0f);
  const float v = detail::gridCoordinate(b, 7.0f);
  const float t = detail::gridCoordinate(c, 6.0f);
  const float w = ((1.5f - abs32(u)) - abs32(v)) - abs32(t);
  if (w >= 0.0f) return {u, v, t, w};
  return {u - sign32(u), v - sign32(v), t - sign32(t), w};
}

/// First-order Taylor expansion of 1/sqrt(r) around r = 0.7.
inline float taylorInvSqrt(float r) {
  return 1.79284291400159f - 0.85373472095314f * r;
}

}  // namespace polynoise
