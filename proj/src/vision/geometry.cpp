#include "vision/geometry.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace drishti::vision {

double iou(const BBox& a, const BBox& b) {
  const double ix0 = std::max(a.x, b.x);
  const double iy0 = std::max(a.y, b.y);
  const double ix1 = std::min(a.x + a.w, b.x + b.w);
  const double iy1 = std::min(a.y + a.h, b.y + b.h);
  const double iw = std::max(0.0, ix1 - ix0);
  const double ih = std::max(0.0, iy1 - iy0);
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0) return 0.0;
  return inter / uni;
}

std::vector<Detection> nms(std::vector<Detection> candidates,
                           double iou_threshold) {
  for (const auto& c : candidates) {
    if (!c.bbox)
      throw InvalidArgumentError("nms: candidate without a bbox");
  }
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return candidates[a].score > candidates[b].score;
                   });

  std::vector<Detection> kept;
  for (std::size_t idx : order) {
    const auto& cand = candidates[idx];
    bool suppressed = false;
    for (const auto& k : kept) {
      if (k.label != cand.label) continue;
      if (iou(*k.bbox, *cand.bbox) >= iou_threshold) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) kept.push_back(cand);
  }
  return kept;
}

}  // namespace drishti::vision
