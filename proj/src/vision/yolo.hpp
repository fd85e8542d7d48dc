#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vision/geometry.hpp"

namespace drishti::vision {

// Raw single-scale YOLO head output: cells_y x cells_x cells, each holding
// nanchors anchor slots of (tx, ty, tw, th, to, tc[0..C)) logits.
struct GridSpec {
  int stride = 8;  // pixels per cell
  std::vector<std::array<double, 2>> anchors;
  int cells_x = 0;
  int cells_y = 0;
  int num_classes = 0;
  std::vector<float> logits;  // [y][x][anchor][5 + C], row-major

  int channels() const { return 5 + num_classes; }
  std::size_t index(int y, int x, int anchor, int channel) const;
  float at(int y, int x, int anchor, int channel) const {
    return logits[index(y, x, anchor, channel)];
  }
  float& at(int y, int x, int anchor, int channel) {
    return logits[index(y, x, anchor, channel)];
  }
  std::size_t expected_size() const;
};

// v5/v7-family transform, per cell (cx, cy) and anchor (aw, ah):
//   center = (2*sigma(txy) - 0.5 + cell) * stride
//   size   = (2*sigma(twh))^2 * anchor
//   score  = sigma(to) * max_j sigma(tc_j), label = argmax_j tc_j
// Emits detections with score >= conf_threshold, boxes in top-left form.
// Throws DimensionMismatchError when grid, image, or class-name dims
// disagree.
std::vector<Detection> decode_yolo(const GridSpec& grid, int image_w,
                                   int image_h, double conf_threshold,
                                   const std::vector<std::string>& class_names);

// Flat tensor fixture files: u32 rank (= 4), u32 dims [ny, nx, na, 5+C],
// then f32 values row-major, all little-endian. Carries the logits only;
// stride and anchors come from configuration.
GridSpec read_grid_tensor(const std::filesystem::path& path, int stride,
                          std::vector<std::array<double, 2>> anchors);
void write_grid_tensor(const std::filesystem::path& path,
                       const GridSpec& grid);

}  // namespace drishti::vision
