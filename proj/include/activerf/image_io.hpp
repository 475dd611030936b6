#pragma once

#include "activerf/geometry.hpp"

#include <filesystem>
#include <vector>

namespace activerf {

/// Row-major single-channel image; row 0 is the top of the image.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  Image() = default;
  Image(int w, int h, double fill = 0.0) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}
  double& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// Grayscale PFM ("Pf"), little-endian float32 (scale -1.0), rows stored
/// bottom-to-top as the format prescribes.
void write_pfm(const std::filesystem::path& path, const Image& image);
Image read_pfm(const std::filesystem::path& path);

/// 8-bit grayscale PNG of values clamped to [0,1].
void write_png(const std::filesystem::path& path, const Image& image);

/// Binary little-endian PLY with float64 x, y, z vertex properties.
void write_ply(const std::filesystem::path& path, const std::vector<Vec3>& points);
std::vector<Vec3> read_ply(const std::filesystem::path& path);

}  // namespace activerf
