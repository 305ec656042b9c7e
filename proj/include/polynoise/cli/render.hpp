#pragma once

#include <array>
#include <optional>

#include "polynoise/cli/image.hpp"
#include "polynoise/noise.hpp"

namespace polynoise::cli {

struct RenderJob {
  NoiseKind kind = NoiseKind::simplex2;
  std::array<int, 4> period{16, 16, 16, 16};
  int width = 256;
  int height = 256;
  Vec4 origin;
  float scale = 1.0f / 32.0f;  // world units per pixel
  float sliceZ = 0.0f;
  float sliceW = 0.0f;
  std::optional<FbmParams> fbm;
  float radius = 4.0f;  // sphere mode only
  int threads = 1;
};

/// Throws std::invalid_argument for nonpositive sizes or scale, or
/// nonfinite slice coordinates.
void validate(const RenderJob& job);

/// The scalar field sampled by a job (plain noise or fBm over it).
float sampleField(const RenderJob& job, const NoiseField& field, Vec4 p);

/// Pixel (c, r) samples origin + (c * scale, r * scale, sliceZ, sliceW).
Image render(const RenderJob& job);

/// Orthographic view of a sphere of the given radius centred at origin.
/// Pixels outside the disc are black. Requires a 3-D or 4-D variant
/// (std::invalid_argument otherwise); the w coordinate is origin.w + sliceW.
Image renderSphere(const RenderJob& job);

}  // namespace polynoise::cli
