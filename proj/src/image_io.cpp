#include "filer/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>

namespace filer {

namespace {

constexpr double kLumR = 0.299, kLumG = 0.587, kLumB = 0.114;

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

GrayImage from_gray8(const std::vector<std::uint8_t>& bytes, Eigen::Index w, Eigen::Index h) {
  Field pixels(h, w);
  for (Eigen::Index y = 0; y < h; ++y)
    for (Eigen::Index x = 0; x < w; ++x)
      pixels(y, x) = static_cast<double>(bytes[static_cast<size_t>(y * w + x)]) / 255.0;
  return GrayImage{std::move(pixels)};
}

GrayImage load_png(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) fail(ErrorCode::FileNotFound, "cannot open " + path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(ErrorCode::IoError, "libpng init failed");
  }
  std::vector<std::uint8_t> interleaved;
  png_uint_32 w = 0, h = 0;
  int channels = 0;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(ErrorCode::UnsupportedFormat, "not a decodable PNG: " + path);
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);
  w = png_get_image_width(png, info);
  h = png_get_image_height(png, info);

  // Normalize every input variant to 8-bit gray or RGB.
  png_byte color = png_get_color_type(png, info);
  png_byte depth = png_get_bit_depth(png, info);
  if (depth == 16) png_set_strip_16(png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  png_read_update_info(png, info);
  channels = png_get_channels(png, info);

  const size_t stride = png_get_rowbytes(png, info);
  interleaved.resize(stride * h);
  std::vector<png_bytep> rows(h);
  for (png_uint_32 y = 0; y < h; ++y) rows[y] = interleaved.data() + y * stride;
  png_read_image(png, rows.data());
  png_destroy_read_struct(&png, &info, nullptr);

  if (w == 0 || h == 0) fail(ErrorCode::ZeroSizedImage, "zero-sized image: " + path);
  if (channels != 1 && channels != 3)
    fail(ErrorCode::UnsupportedFormat, "unsupported channel count in " + path);

  const auto iw = static_cast<Eigen::Index>(w), ih = static_cast<Eigen::Index>(h);
  if (channels == 1) return from_gray8(interleaved, iw, ih);

  Field pixels(ih, iw);
  for (Eigen::Index y = 0; y < ih; ++y) {
    const std::uint8_t* row = interleaved.data() + static_cast<size_t>(y) * stride;
    for (Eigen::Index x = 0; x < iw; ++x) {
      const std::uint8_t* p = row + 3 * x;
      pixels(y, x) = (kLumR * p[0] + kLumG * p[1] + kLumB * p[2]) / 255.0;
    }
  }
  return GrayImage{std::move(pixels)};
}

GrayImage load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open " + path);
  std::string magic;
  in >> magic;
  if (magic != "P5" && magic != "P2") fail(ErrorCode::UnsupportedFormat, "not a PGM: " + path);
  auto next_token = [&in, &path]() {
    long v = -1;
    while (true) {
      in >> std::ws;
      if (in.peek() == '#') {
        std::string line;
        std::getline(in, line);
        continue;
      }
      if (!(in >> v)) fail(ErrorCode::UnsupportedFormat, "truncated PGM header: " + path);
      return v;
    }
  };
  const long w = next_token(), h = next_token(), maxval = next_token();
  if (w <= 0 || h <= 0) fail(ErrorCode::ZeroSizedImage, "zero-sized image: " + path);
  if (maxval <= 0 || maxval > 255)
    fail(ErrorCode::UnsupportedFormat, "only 8-bit PGM supported: " + path);

  Field pixels(h, w);
  if (magic == "P5") {
    in.get();  // single whitespace after maxval
    std::vector<std::uint8_t> bytes(static_cast<size_t>(w) * static_cast<size_t>(h));
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!in) fail(ErrorCode::UnsupportedFormat, "truncated PGM payload: " + path);
    for (Eigen::Index y = 0; y < h; ++y)
      for (Eigen::Index x = 0; x < w; ++x)
        pixels(y, x) = static_cast<double>(bytes[static_cast<size_t>(y * w + x)]) / maxval;
  } else {
    for (Eigen::Index y = 0; y < h; ++y)
      for (Eigen::Index x = 0; x < w; ++x) {
        long v;
        if (!(in >> v)) fail(ErrorCode::UnsupportedFormat, "truncated PGM payload: " + path);
        pixels(y, x) = static_cast<double>(v) / maxval;
      }
  }
  return GrayImage{std::move(pixels)};
}

std::uint8_t to_byte(double v) {
  const double c = std::clamp(v, 0.0, 1.0);
  return static_cast<std::uint8_t>(std::lround(c * 255.0));
}

}  // namespace

GrayImage load_grayscale(const std::string& path) {
  if (!std::filesystem::exists(path)) fail(ErrorCode::FileNotFound, "no such file: " + path);
  std::ifstream probe(path, std::ios::binary);
  std::array<char, 8> head{};
  probe.read(head.data(), head.size());
  const auto got = probe.gcount();
  static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
  if (got >= 8 && std::memcmp(head.data(), png_sig, 8) == 0) return load_png(path);
  if (got >= 2 && head[0] == 'P' && (head[1] == '5' || head[1] == '2')) return load_pgm(path);
  fail(ErrorCode::UnsupportedFormat, "unrecognized raster format: " + path);
}

void save_gray_png(const std::string& path, const Field& image) {
  RgbImage rgb = make_rgb(image.cols(), image.rows());
  // Reuse the RGB writer path but emit a single-channel PNG.
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) fail(ErrorCode::IoError, "cannot write " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    fail(ErrorCode::IoError, "libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(ErrorCode::IoError, "png write failed: " + path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.cols()),
               static_cast<png_uint_32>(image.rows()), 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<std::uint8_t> row(static_cast<size_t>(image.cols()));
  for (Eigen::Index y = 0; y < image.rows(); ++y) {
    for (Eigen::Index x = 0; x < image.cols(); ++x)
      row[static_cast<size_t>(x)] = to_byte(image(y, x));
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  (void)rgb;
}

void save_gray_pgm(const std::string& path, const Field& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path);
  out << "P5\n" << image.cols() << " " << image.rows() << "\n255\n";
  for (Eigen::Index y = 0; y < image.rows(); ++y)
    for (Eigen::Index x = 0; x < image.cols(); ++x) out.put(static_cast<char>(to_byte(image(y, x))));
}

RgbImage make_rgb(Eigen::Index width, Eigen::Index height, std::array<std::uint8_t, 3> fill) {
  RgbImage img;
  img.width = width;
  img.height = height;
  img.data.resize(static_cast<size_t>(width) * static_cast<size_t>(height) * 3);
  for (size_t i = 0; i < img.data.size(); i += 3) {
    img.data[i] = fill[0];
    img.data[i + 1] = fill[1];
    img.data[i + 2] = fill[2];
  }
  return img;
}

void save_rgb_png(const std::string& path, const RgbImage& image) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) fail(ErrorCode::IoError, "cannot write " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    fail(ErrorCode::IoError, "libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(ErrorCode::IoError, "png write failed: " + path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
               static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (Eigen::Index y = 0; y < image.height; ++y)
    png_write_row(png, const_cast<png_bytep>(image.data.data() + 3 * y * image.width));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace filer
