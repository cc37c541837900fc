#pragma once

#include "filer/core.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace filer {

// Reads an 8-bit PNG or PGM raster. RGB(A) input collapses to luminance with
// weights 0.299/0.587/0.114; values scale to [0,1].
GrayImage load_grayscale(const std::string& path);

// Writers quantize with round(v*255) after clamping to [0,1].
void save_gray_png(const std::string& path, const Field& image);
void save_gray_pgm(const std::string& path, const Field& image);

// Interleaved 8-bit RGB raster used by the overlay renderer.
struct RgbImage {
  Eigen::Index width = 0;
  Eigen::Index height = 0;
  std::vector<std::uint8_t> data;  // 3 bytes per pixel, row-major

  std::uint8_t* at(Eigen::Index x, Eigen::Index y) { return data.data() + 3 * (y * width + x); }
};

RgbImage make_rgb(Eigen::Index width, Eigen::Index height,
                  std::array<std::uint8_t, 3> fill = {0, 0, 0});
void save_rgb_png(const std::string& path, const RgbImage& image);

}  // namespace filer
