#include "polynoise/noise.hpp"

#include <stdexcept>
#include <string>

#include "polynoise/gradient.hpp"
#include "polynoise/hash.hpp"

namespace polynoise {

namespace {

// Output scales. Simplex 2-D is the published value; the rest come from
// tools/calibrate_scale (1 / max |raw value| found by random search plus
// hill climbing, rounded down to a multiple of 2^-10).
constexpr float kSimplex2Scale = 130.0f;
constexpr float kSimplex3Scale = 108.04296875f;
constexpr float kSimplex4Scale = 108.734375f;
constexpr float kClassic2Scale = 2.375f;
constexpr float kClassic3Scale = 1.4931640625f;
constexpr float kClassic4Scale = 1.4365234375f;

constexpr float kSkew2 = 0.366025403784438597f;    // 0.5 * (sqrt(3) - 1)
constexpr float kUnskew2 = 0.211324865405187134f;  // (3 - sqrt(3)) / 6
constexpr float kSkew3 = 1.0f / 3.0f;
constexpr float kUnskew3 = 1.0f / 6.0f;
constexpr float kSkew4 = 0.309016994374947424f;    // (sqrt(5) - 1) / 4
constexpr float kUnskew4 = 0.138196601125010515f;  // (5 - sqrt(5)) / 20

template <int N>
using Coords = std::array<float, N>;

template <int N>
float dotN(const Coords<N>& a, const Coords<N>& b) {
  float sum = a[0] * b[0];
  for (int k = 1; k < N; ++k) sum = sum + a[k] * b[k];
  return sum;
}

Coords<2> gradientAt(const Coords<2>& c) {
  const Gradient2 g = grad2(hashCorner2({c[0], c[1]}));
  return {g.x, g.y};
}

Coords<3> gradientAt(const Coords<3>& c) {
  const Gradient3 g = grad3(hashCorner3({c[0], c[1], c[2]}));
  return {g.x, g.y, g.z};
}

Coords<4> gradientAt(const Coords<4>& c) {
  const Gradient4 g = grad4(hashCorner4({c[0], c[1], c[2], c[3]}));
  return {g.x, g.y, g.z, g.w};
}

// Quintic fade t^3 (t (6t - 15) + 10).
float fade(float t) { return t * t * t * (t * (t * 6.0f - 15.0f) + 10.0f); }

// Classic gradient noise over the 2^N corners of the containing cell.
// With a period, corner coordinates wrap per axis before hashing.
template <int N>
float classicNoise(const Coords<N>& p, const int* period, const NoiseParams& params) {
  Coords<N> low{};
  Coords<N> high{};
  Coords<N> frac{};
  Coords<N> weight{};
  for (int a = 0; a < N; ++a) {
    const float cell = floor32(p[a]);
    frac[a] = p[a] - cell;
    weight[a] = fade(frac[a]);
    if (period != nullptr) {
      const float axis = static_cast<float>(period[a]);
      low[a] = mod32(cell, axis);
      high[a] = mod32(low[a] + 1.0f, axis);
    } else {
      low[a] = mod289(cell);
      high[a] = low[a] + 1.0f;
    }
  }

  constexpr int kCorners = 1 << N;
  std::array<float, kCorners> value{};
  for (int corner = 0; corner < kCorners; ++corner) {
    Coords<N> lattice{};
    Coords<N> offset{};
    for (int a = 0; a < N; ++a) {
      const bool upper = ((corner >> a) & 1) != 0;
      lattice[a] = upper ? high[a] : low[a];
      offset[a] = upper ? frac[a] - 1.0f : frac[a];
    }
    const Coords<N> g = gradientAt(lattice);
    float n = dotN<N>(g, offset);
    if (params.normalizeGradients) n = taylorInvSqrt(dotN<N>(g, g)) * n;
    value[corner] = n;
  }

  // x innermost, then y, z, w.
  int count = kCorners;
  for (int a = 0; a < N; ++a) {
    count >>= 1;
    for (int j = 0; j < count; ++j) {
      value[j] = mix32(value[2 * j], value[2 * j + 1], weight[a]);
    }
  }
  return params.outputScale * value[0];
}

// One simplex corner: radial kernel, optional implicit normalization, and
// the gradient projection. Returns {m, dot(g, x)}.
template <typename V, typename G>
std::array<float, 2> simplexCorner(V x, G g, const NoiseParams& params) {
  float m = kernelTerm(dot(x, x), params.kernelRadius).m;
  if (params.normalizeGradients) m = m * taylorInvSqrt(dot(g, g));
  return {m, dot(g, x)};
}

Vec3 sub(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec4 sub(Vec4 a, Vec4 b) { return {a.x - b.x, a.y - b.y, a.z - b.z, a.w - b.w}; }
Vec3 addScalar(Vec3 a, float s) { return {a.x + s, a.y + s, a.z + s}; }
Vec4 addScalar(Vec4 a, float s) { return {a.x + s, a.y + s, a.z + s, a.w + s}; }
Vec3 add(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec4 add(Vec4 a, Vec4 b) { return {a.x + b.x, a.y + b.y, a.z + b.z, a.w + b.w}; }

template <int N>
void checkPeriod(const std::array<int, N>& axes) {
  for (int axis : axes) {
    if (axis < Period<N>::kMin || axis > Period<N>::kMax) {
      throw std::domain_error("period axis " + std::to_string(axis) + " outside [1, 288]");
    }
  }
}

}  // namespace

SkewConstants skewConstants(int dimension) {
  switch (dimension) {
    case 2: return {2, kSkew2, kUnskew2};
    case 3: return {3, kSkew3, kUnskew3};
    case 4: return {4, kSkew4, kUnskew4};
    default:
      throw std::invalid_argument("skew constants: unsupported dimension " +
                                  std::to_string(dimension));
  }
}

CornerOffsets3 rank3(Vec3 x) {
  // c_jk = 1 when axis j outranks axis k (x_j >= x_k for j < k).
  const float c01 = step32(x.y, x.x);
  const float c02 = step32(x.z, x.x);
  const float c12 = step32(x.z, x.y);
  const Vec3 rank{c01 + c02, (1.0f - c01) + c12, (1.0f - c02) + (1.0f - c12)};
  return {
      {step32(2.0f, rank.x), step32(2.0f, rank.y), step32(2.0f, rank.z)},
      {step32(1.0f, rank.x), step32(1.0f, rank.y), step32(1.0f, rank.z)},
  };
}

CornerOffsets4 rank4(Vec4 x) {
  const float c01 = step32(x.y, x.x);
  const float c02 = step32(x.z, x.x);
  const float c03 = step32(x.w, x.x);
  const float c12 = step32(x.z, x.y);
  const float c13 = step32(x.w, x.y);
  const float c23 = step32(x.w, x.z);
  const Vec4 rank{
      (c01 + c02) + c03,
      ((1.0f - c01) + c12) + c13,
      ((1.0f - c02) + (1.0f - c12)) + c23,
      ((1.0f - c03) + (1.0f - c13)) + (1.0f - c23),
  };
  auto atLeast = [&rank](float r) {
    return Vec4{step32(r, rank.x), step32(r, rank.y), step32(r, rank.z), step32(r, rank.w)};
  };
  return {atLeast(3.0f), atLeast(2.0f), atLeast(1.0f)};
}

NoiseParams defaultParams(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::simplex2: return {0.5f, kSimplex2Scale, true};
    case NoiseKind::simplex3: return {0.5f, kSimplex3Scale, true};
    case NoiseKind::simplex4: return {0.5f, kSimplex4Scale, true};
    case NoiseKind::classic2:
    case NoiseKind::periodic2: return {0.5f, kClassic2Scale, true};
    case NoiseKind::classic3:
    case NoiseKind::periodic3: return {0.5f, kClassic3Scale, true};
    case NoiseKind::classic4:
    case NoiseKind::periodic4: return {0.5f, kClassic4Scale, true};
  }
  return {};
}

template <int N>
Period<N>::Period(const std::array<int, N>& axes) : axes_(axes) {
  checkPeriod<N>(axes_);
}

template class Period<2>;
template class Period<3>;
template class Period<4>;

float snoise2(Vec2 p, const NoiseParams& params) {
  // First corner
  const float s = p.x * kSkew2 + p.y * kSkew2;
  Vec2 i{floor32(p.x + s), floor32(p.y + s)};
  const float t = i.x * kUnskew2 + i.y * kUnskew2;
  const Vec2 x0{(p.x - i.x) + t, (p.y - i.y) + t};

  // Other corners
  const float i1x = step32(x0.y, x0.x);
  const float i1y = 1.0f - i1x;
  const float last = kUnskew2 * 2.0f - 1.0f;
  const Vec2 x1{(x0.x + kUnskew2) - i1x, (x0.y + kUnskew2) - i1y};
  const Vec2 x2{x0.x + last, x0.y + last};

  i = {mod289(i.x), mod289(i.y)};
  const Gradient2 g0 = grad2(hashCorner2(i));
  const Gradient2 g1 = grad2(hashCorner2({i.x + i1x, i.y + i1y}));
  const Gradient2 g2 = grad2(hashCorner2({i.x + 1.0f, i.y + 1.0f}));

  const auto [m0, d0] = simplexCorner(x0, g0, params);
  const auto [m1, d1] = simplexCorner(x1, g1, params);
  const auto [m2, d2] = simplexCorner(x2, g2, params);
  return params.outputScale * ((m0 * d0 + m1 * d1) + m2 * d2);
}

float snoise3(Vec3 p, const NoiseParams& params) {
  const float s = (p.x * kSkew3 + p.y * kSkew3) + p.z * kSkew3;
  Vec3 i{floor32(p.x + s), floor32(p.y + s), floor32(p.z + s)};
  const float t = (i.x * kUnskew3 + i.y * kUnskew3) + i.z * kUnskew3;
  const Vec3 x0 = addScalar(sub(p, i), t);

  const CornerOffsets3 o = rank3(x0);
  const Vec3 x1 = addScalar(sub(x0, o.i1), kUnskew3);
  const Vec3 x2 = addScalar(sub(x0, o.i2), 2.0f * kUnskew3);
  const Vec3 x3 = addScalar(addScalar(x0, -1.0f), 3.0f * kUnskew3);

  i = {mod289(i.x), mod289(i.y), mod289(i.z)};
  const Gradient3 g0 = grad3(hashCorner3(i));
  const Gradient3 g1 = grad3(hashCorner3(add(i, o.i1)));
  const Gradient3 g2 = grad3(hashCorner3(add(i, o.i2)));
  const Gradient3 g3 = grad3(hashCorner3(addScalar(i, 1.0f)));

  const auto [m0, d0] = simplexCorner(x0, g0, params);
  const auto [m1, d1] = simplexCorner(x1, g1, params);
  const auto [m2, d2] = simplexCorner(x2, g2, params);
  const auto [m3, d3] = simplexCorner(x3, g3, params);
  return params.outputScale * (((m0 * d0 + m1 * d1) + m2 * d2) + m3 * d3);
}

float snoise4(Vec4 p, const NoiseParams& params) {
  const float s = ((p.x * kSkew4 + p.y * kSkew4) + p.z * kSkew4) + p.w * kSkew4;
  Vec4 i{floor32(p.x + s), floor32(p.y + s), floor32(p.z + s), floor32(p.w + s)};
  const float t = ((i.x * kUnskew4 + i.y * kUnskew4) + i.z * kUnskew4) + i.w * kUnskew4;
  const Vec4 x0 = addScalar(sub(p, i), t);

  const CornerOffsets4 o = rank4(x0);
  const Vec4 x1 = addScalar(sub(x0, o.i1), kUnskew4);
  const Vec4 x2 = addScalar(sub(x0, o.i2), 2.0f * kUnskew4);
  const Vec4 x3 = addScalar(sub(x0, o.i3), 3.0f * kUnskew4);
  const Vec4 x4 = addScalar(addScalar(x0, -1.0f), 4.0f * kUnskew4);

  i = {mod289(i.x), mod289(i.y), mod289(i.z), mod289(i.w)};
  const Gradient4 g0 = grad4(hashCorner4(i));
  const Gradient4 g1 = grad4(hashCorner4(add(i, o.i1)));
  const Gradient4 g2 = grad4(hashCorner4(add(i, o.i2)));
  const Gradient4 g3 = grad4(hashCorner4(add(i, o.i3)));
  const Gradient4 g4 = grad4(hashCorner4(addScalar(i, 1.0f)));

  const auto [m0, d0] = simplexCorner(x0, g0, params);
  const auto [m1, d1] = simplexCorner(x1, g1, params);
  const auto [m2, d2] = simplexCorner(x2, g2, params);
  const auto [m3, d3] = simplexCorner(x3, g3, params);
  const auto [m4, d4] = simplexCorner(x4, g4, params);
  return params.outputScale * ((((m0 * d0 + m1 * d1) + m2 * d2) + m3 * d3) + m4 * d4);
}

float cnoise2(Vec2 p, const NoiseParams& params) {
  return classicNoise<2>({p.x, p.y}, nullptr, params);
}

float cnoise3(Vec3 p, const NoiseParams& params) {
  return classicNoise<3>({p.x, p.y, p.z}, nullptr, params);
}

float cnoise4(Vec4 p, const NoiseParams& params) {
  return classicNoise<4>({p.x, p.y, p.z, p.w}, nullptr, params);
}

float pnoise2(Vec2 p, const Period2& period, const NoiseParams& params) {
  return classicNoise<2>({p.x, p.y}, period.axes().data(), params);
}

float pnoise3(Vec3 p, const Period3& period, const NoiseParams& params) {
  return classicNoise<3>({p.x, p.y, p.z}, period.axes().data(), params);
}

float pnoise4(Vec4 p, const Period4& period, const NoiseParams& params) {
  return classicNoise<4>({p.x, p.y, p.z, p.w}, period.axes().data(), params);
}

NoiseField::NoiseField(NoiseKind kind, std::array<int, 4> period)
    : NoiseField(kind, defaultParams(kind), period) {}

NoiseField::NoiseField(NoiseKind kind, const NoiseParams& params, std::array<int, 4> period)
    : kind_(kind), params_(params), period_(period) {
  if (isPeriodic(kind_)) checkPeriod<4>(period_);
}

float NoiseField::operator()(Vec4 p) const {
  switch (kind_) {
    case NoiseKind::simplex2: return snoise2({p.x, p.y}, params_);
    case NoiseKind::simplex3: return snoise3({p.x, p.y, p.z}, params_);
    case NoiseKind::simplex4: return snoise4(p, params_);
    case NoiseKind::classic2: return classicNoise<2>({p.x, p.y}, nullptr, params_);
    case NoiseKind::classic3: return classicNoise<3>({p.x, p.y, p.z}, nullptr, params_);
    case NoiseKind::classic4: return classicNoise<4>({p.x, p.y, p.z, p.w}, nullptr, params_);
    case NoiseKind::periodic2: return classicNoise<2>({p.x, p.y}, period_.data(), params_);
    case NoiseKind::periodic3: return classicNoise<3>({p.x, p.y, p.z}, period_.data(), params_);
    case NoiseKind::periodic4:
      return classicNoise<4>({p.x, p.y, p.z, p.w}, period_.data(), params_);
  }
  return 0.0f;
}

float fbm(const NoiseField& field, Vec4 p, const FbmParams& params) {
  if (params.octaves < 1) throw std::domain_error("fbm: octaves must be at least 1");
  if (!(params.lacunarity > 0.0f)) throw std::domain_error("fbm: lacunarity must be positive");
  if (!(params.gain > 0.0f)) throw std::domain_error("fbm: gain must be positive");

  float sum = 0.0f;
  float norm = 0.0f;
  float amplitude = 1.0f;
  float frequency = 1.0f;
  for (int k = 0; k < params.octaves; ++k) {
    const Vec4 q{p.x * frequency, p.y * frequency, p.z * frequency, p.w * frequency};
    sum = sum + amplitude * field(q);
    norm = norm + amplitude;
    amplitude = amplitude * params.gain;
    frequency = frequency * params.lacunarity;
  }
  return sum / norm;
}

}  // namespace polynoise
