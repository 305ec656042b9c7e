#include "polynoise/cli/render.hpp"

#include <cmath>
#include <stdexcept>

#include "polynoise/cli/sampling.hpp"

namespace polynoise::cli {

void validate(const RenderJob& job) {
  if (job.width < 1 || job.height < 1) throw std::invalid_argument("image size must be at least 1x1");
  if (!(job.scale > 0.0f) || !std::isfinite(job.scale)) throw std::invalid_argument("scale must be positive");
  if (!std::isfinite(job.sliceZ) || !std::isfinite(job.sliceW)) {
    throw std::invalid_argument("slice coordinates must be finite");
  }
  if (!(job.radius > 0.0f) || !std::isfinite(job.radius)) throw std::invalid_argument("radius must be positive");
}

float sampleField(const RenderJob& job, const NoiseField& field, Vec4 p) {
  return job.fbm ? fbm(field, p, *job.fbm) : field(p);
}

namespace {

template <typename PixelFn>
Image renderRows(const RenderJob& job, PixelFn pixel) {
  Image image(job.width, job.height);
  parallelBlocks(static_cast<std::size_t>(job.height), job.threads, [&](std::size_t block) {
    const int row = static_cast<int>(block);
    for (int column = 0; column < job.width; ++column) image.at(column, row) = pixel(column, row);
  });
  return image;
}

}  // namespace

Image render(const RenderJob& job) {
  validate(job);
  const NoiseField field(job.kind, job.period);
  return renderRows(job, [&](int column, int row) {
    const Vec4 p{job.origin.x + static_cast<float>(column) * job.scale,
                 job.origin.y + static_cast<float>(row) * job.scale, job.origin.z + job.sliceZ,
                 job.origin.w + job.sliceW};
    return toPixel(sampleField(job, field, p));
  });
}

Image renderSphere(const RenderJob& job) {
  validate(job);
  if (dimension(job.kind) < 3) throw std::invalid_argument("sphere rendering needs a 3-D or 4-D variant");
  const NoiseField field(job.kind, job.period);
  const float width = static_cast<float>(job.width);
  const float height = static_cast<float>(job.height);
  return renderRows(job, [&](int column, int row) -> std::uint8_t {
    const float nx = ((static_cast<float>(column) + 0.5f) * 2.0f) / width - 1.0f;
    const float ny = 1.0f - ((static_cast<float>(row) + 0.5f) * 2.0f) / height;
    const float rr = nx * nx + ny * ny;
    if (rr > 1.0f) return 0;
    const float nz = std::sqrt(1.0f - rr);
    const Vec4 p{job.origin.x + job.radius * nx, job.origin.y + job.radius * ny,
                 job.origin.z + job.radius * nz, job.origin.w + job.sliceW};
    return toPixel(sampleField(job, field, p));
  });
}

}  // namespace polynoise::cli
