#pragma once

// Simplex, classic and periodic gradient noise in 2, 3 and 4 dimensions.
//
// All evaluators are pure binary32 functions with no tables and no state.
// snoise2 with default parameters reproduces the self-contained 2-D GLSL
// listing bit for bit; the other variants follow the same construction
// (permutation-polynomial hash, cross-polytope gradients, rank-ordered
// simplex traversal).
//
// Inputs are supported up to |coordinate| <= 2048. Larger coordinates are
// accepted but lose fractional precision and the field degrades visibly.

#include <array>
#include <cstdint>

#include "polynoise/f32.hpp"
#include "polynoise/noise_kind.hpp"

namespace polynoise {

inline constexpr float kSupportedDomain = 2048.0f;

/// Skew factor F and unskew factor G for the N-simplex grid.
struct SkewConstants {
  int dimension = 0;
  float skew = 0.0f;
  float unskew = 0.0f;
};

/// F = (sqrt(N+1) - 1) / N and G = (1 - 1/sqrt(N+1)) / N, rounded once to
/// binary32. Throws std::invalid_argument unless N is 2, 3 or 4.
SkewConstants skewConstants(int dimension);

/// 0/1 corner offsets of the simplex containing an in-cell point. i1 marks
/// the largest component, i2 the two largest, i3 the three largest.
struct CornerOffsets3 {
  Vec3 i1;
  Vec3 i2;
};

struct CornerOffsets4 {
  Vec4 i1;
  Vec4 i2;
  Vec4 i3;
};

// Rank ordering by pairwise comparisons (3 in 3-D, 6 in 4-D). Ties go to
// the lower axis index, which matches step(x_k, x_j) returning 1 on
// equality.
CornerOffsets3 rank3(Vec3 x);
CornerOffsets4 rank4(Vec4 x);

struct KernelTerm {
  float r2 = 0.0f;
  float m = 0.0f;
};

/// m = max(radius - r2, 0)^4, evaluated as two squarings.
inline KernelTerm kernelTerm(float r2, float radius) {
  float m = max32(radius - r2, 0.0f);
  m = m * m;
  m = m * m;
  return {r2, m};
}

struct NoiseParams {
  float kernelRadius = 0.5f;  // simplex only
  float outputScale = 1.0f;
  bool normalizeGradients = true;
};

/// Defaults per variant. 2-D simplex uses the published scale of 130; the
/// other scales were calibrated by tools/calibrate_scale (maximum search
/// with normalization on) and are frozen here.
NoiseParams defaultParams(NoiseKind kind);

/// Per-axis integer period for the periodic classic variants.
template <int N>
class Period {
 public:
  static constexpr int kMin = 1;
  static constexpr int kMax = 288;

  /// Throws std::domain_error if any axis is outside [1, 288].
  explicit Period(const std::array<int, N>& axes);

  const std::array<int, N>& axes() const { return axes_; }

 private:
  std::array<int, N> axes_;
};

using Period2 = Period<2>;
using Period3 = Period<3>;
using Period4 = Period<4>;

float snoise2(Vec2 p, const NoiseParams& params);
float snoise3(Vec3 p, const NoiseParams& params);
float snoise4(Vec4 p, const NoiseParams& params);

float cnoise2(Vec2 p, const NoiseParams& params);
float cnoise3(Vec3 p, const NoiseParams& params);
float cnoise4(Vec4 p, const NoiseParams& params);

float pnoise2(Vec2 p, const Period2& period, const NoiseParams& params);
float pnoise3(Vec3 p, const Period3& period, const NoiseParams& params);
float pnoise4(Vec4 p, const Period4& period, const NoiseParams& params);

inline float snoise2(Vec2 p) { return snoise2(p, defaultParams(NoiseKind::simplex2)); }
inline float snoise3(Vec3 p) { return snoise3(p, defaultParams(NoiseKind::simplex3)); }
inline float snoise4(Vec4 p) { return snoise4(p, defaultParams(NoiseKind::simplex4)); }
inline float cnoise2(Vec2 p) { return cnoise2(p, defaultParams(NoiseKind::classic2)); }
inline float cnoise3(Vec3 p) { return cnoise3(p, defaultParams(NoiseKind::classic3)); }
inline float cnoise4(Vec4 p) { return cnoise4(p, defaultParams(NoiseKind::classic4)); }
inline float pnoise2(Vec2 p, const Period2& period) {
  return pnoise2(p, period, defaultParams(NoiseKind::periodic2));
}
inline float pnoise3(Vec3 p, const Period3& period) {
  return pnoise3(p, period, defaultParams(NoiseKind::periodic3));
}
inline float pnoise4(Vec4 p, const Period4& period) {
  return pnoise4(p, period, defaultParams(NoiseKind::periodic4));
}

/// Any of the nine variants behind one call signature. Coordinates beyond
/// the variant's dimension are ignored; period axes beyond it likewise.
class NoiseField {
 public:
  explicit NoiseField(NoiseKind kind, std::array<int, 4> period = {16, 16, 16, 16});
  NoiseField(NoiseKind kind, const NoiseParams& params, std::array<int, 4> period = {16, 16, 16, 16});

  NoiseKind kind() const { return kind_; }
  const NoiseParams& params() const { return params_; }
  const std::array<int, 4>& period() const { return period_; }

  float operator()(Vec4 p) const;

 private:
  NoiseKind kind_;
  NoiseParams params_;
  std::array<int, 4> period_;
};

struct FbmParams {
  int octaves = 1;
  float lacunarity = 2.0f;
  float gain = 0.5f;
};

/// Sum of gain^k * field(lacunarity^k * p) for k < octaves, divided by the
/// sum of the weights. Throws std::domain_error for octaves < 1 or a
/// nonpositive lacunarity or gain.
float fbm(const NoiseField& field, Vec4 p, const FbmParams& params);

}  // namespace polynoise
