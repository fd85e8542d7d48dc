#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace drishti {

// 8-bit RGB raster, row-major, 3 bytes per pixel.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;

  Image() = default;
  Image(int w, int h, std::uint8_t r = 0, std::uint8_t g = 0,
        std::uint8_t b = 0);

  bool empty() const { return rgb.empty(); }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }

  const std::uint8_t* at(int x, int y) const {
    return rgb.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }
  std::uint8_t* at(int x, int y) {
    return rgb.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }
  void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    auto* p = at(x, y);
    p[0] = r;
    p[1] = g;
    p[2] = b;
  }
};

// h in [0, 360), s and v in [0, 1].
struct Hsv {
  double h = 0;
  double s = 0;
  double v = 0;
};

Hsv rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b);
void hsv_to_rgb(const Hsv& c, std::uint8_t& r, std::uint8_t& g,
                std::uint8_t& b);

// Rec.601 luma in [0, 255].
inline double luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

// Area-average (box) downsample. Each output pixel averages the source
// rectangle it covers; deterministic integer rounding.
Image downsample_box(const Image& src, int out_w, int out_h);

}  // namespace drishti
