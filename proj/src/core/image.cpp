#include "core/image.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace drishti {

Image::Image(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b)
    : width(w), height(h), rgb(static_cast<std::size_t>(w) * h * 3) {
  for (std::size_t i = 0; i < rgb.size(); i += 3) {
    rgb[i] = r;
    rgb[i + 1] = g;
    rgb[i + 2] = b;
  }
}

Hsv rgb_to_hsv(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
  const double r = r8 / 255.0, g = g8 / 255.0, b = b8 / 255.0;
  const double mx = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double d = mx - mn;
  Hsv out;
  out.v = mx;
  out.s = mx == 0 ? 0 : d / mx;
  if (d == 0) {
    out.h = 0;
  } else if (mx == r) {
    out.h = 60.0 * std::fmod((g - b) / d, 6.0);
  } else if (mx == g) {
    out.h = 60.0 * ((b - r) / d + 2.0);
  } else {
    out.h = 60.0 * ((r - g) / d + 4.0);
  }
  if (out.h < 0) out.h += 360.0;
  return out;
}

void hsv_to_rgb(const Hsv& c, std::uint8_t& r, std::uint8_t& g,
                std::uint8_t& b) {
  const double h = std::fmod(std::fmod(c.h, 360.0) + 360.0, 360.0);
  const double s = std::clamp(c.s, 0.0, 1.0);
  const double v = std::clamp(c.v, 0.0, 1.0);
  const double cc = v * s;
  const double x = cc * (1 - std::fabs(std::fmod(h / 60.0, 2.0) - 1));
  const double m = v - cc;
  double rr = 0, gg = 0, bb = 0;
  if (h < 60) {
    rr = cc, gg = x;
  } else if (h < 120) {
    rr = x, gg = cc;
  } else if (h < 180) {
    gg = cc, bb = x;
  } else if (h < 240) {
    gg = x, bb = cc;
  } else if (h < 300) {
    rr = x, bb = cc;
  } else {
    rr = cc, bb = x;
  }
  r = static_cast<std::uint8_t>(std::lround((rr + m) * 255.0));
  g = static_cast<std::uint8_t>(std::lround((gg + m) * 255.0));
  b = static_cast<std::uint8_t>(std::lround((bb + m) * 255.0));
}

Image downsample_box(const Image& src, int out_w, int out_h) {
  if (src.empty() || out_w <= 0 || out_h <= 0)
    throw InvalidArgumentError("downsample_box: empty input or bad dims");
  Image out;
  out.width = out_w;
  out.height = out_h;
  out.rgb.resize(static_cast<std::size_t>(out_w) * out_h * 3);
  for (int oy = 0; oy < out_h; ++oy) {
    const int y0 = static_cast<int>(static_cast<std::int64_t>(oy) *
                                    src.height / out_h);
    int y1 = static_cast<int>(static_cast<std::int64_t>(oy + 1) * src.height /
                              out_h);
    y1 = std::max(y1, y0 + 1);
    for (int ox = 0; ox < out_w; ++ox) {
      const int x0 = static_cast<int>(static_cast<std::int64_t>(ox) *
                                      src.width / out_w);
      int x1 = static_cast<int>(static_cast<std::int64_t>(ox + 1) * src.width /
                                out_w);
      x1 = std::max(x1, x0 + 1);
      std::uint64_t sum[3] = {0, 0, 0};
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          const auto* p = src.at(x, y);
          sum[0] += p[0];
          sum[1] += p[1];
          sum[2] += p[2];
        }
      }
      const std::uint64_t n =
          static_cast<std::uint64_t>(y1 - y0) * static_cast<std::uint64_t>(x1 - x0);
      auto* q = out.at(ox, oy);
      for (int c = 0; c < 3; ++c)
        q[c] = static_cast<std::uint8_t>((sum[c] + n / 2) / n);
    }
  }
  return out;
}

}  // namespace drishti
