#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polynoise::cli {

/// Row-major 8-bit grayscale image, top row first.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  Image() = default;
  Image(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, 0) {}

  std::uint8_t& at(int column, int row) {
    return pixels[static_cast<std::size_t>(row) * width + column];
  }
  std::uint8_t at(int column, int row) const {
    return pixels[static_cast<std::size_t>(row) * width + column];
  }
};

enum class ImageFormat { pgm, png };

/// Raised when an output file cannot be written (CLI exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// clamp(round_half_up((v + 1) / 2 * 255), 0, 255); 0 maps to 128.
std::uint8_t toPixel(float value);

/// "P5\n<w> <h>\n255\n" followed by the raw rows.
std::string encodePgm(const Image& image);

bool pngSupported();

/// Throws IoError on failure and std::invalid_argument if PNG support was
/// not compiled in.
std::string encodePng(const Image& image);

void writeImage(const Image& image, const std::string& path, ImageFormat format);

}  // namespace polynoise::cli
