#include "polynoise/cli/image.hpp"

#include <fstream>

#include "polynoise/f32.hpp"

#ifdef POLYNOISE_WITH_PNG
#include <png.h>
#endif

namespace polynoise::cli {

std::uint8_t toPixel(float value) {
  if (!(value == value)) return 0;  // NaN
  const float level = floor32(((value + 1.0f) * 0.5f) * 255.0f + 0.5f);
  if (level <= 0.0f) return 0;
  if (level >= 255.0f) return 255;
  return static_cast<std::uint8_t>(level);
}

std::string encodePgm(const Image& image) {
  std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  out.append(image.pixels.begin(), image.pixels.end());
  return out;
}

bool pngSupported() {
#ifdef POLYNOISE_WITH_PNG
  return true;
#else
  return false;
#endif
}

#ifdef POLYNOISE_WITH_PNG
namespace {

void appendToString(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::string*>(png_get_io_ptr(png));
  out->append(reinterpret_cast<const char*>(data), length);
}

void flushNothing(png_structp) {}

}  // namespace
#endif

std::string encodePng(const Image& image) {
#ifdef POLYNOISE_WITH_PNG
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw IoError("png: cannot create write struct");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png: cannot create info struct");
  }

  std::string out;
  std::vector<png_bytep> rows(static_cast<std::size_t>(image.height));
  for (int r = 0; r < image.height; ++r) {
    rows[r] = const_cast<png_bytep>(image.pixels.data() + static_cast<std::size_t>(r) * image.width);
  }

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("png: encoding failed");
  }
  png_set_write_fn(png, &out, appendToString, flushNothing);
  png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
#else
  (void)image;
  throw std::invalid_argument("PNG output was not enabled at build time");
#endif
}

void writeImage(const Image& image, const std::string& path, ImageFormat format) {
  const std::string bytes = format == ImageFormat::png ? encodePng(image) : encodePgm(image);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace polynoise::cli
