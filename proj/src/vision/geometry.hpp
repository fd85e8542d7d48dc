#pragma once

#include <optional>
#include <string>
#include <vector>

namespace drishti::vision {

// Axis-aligned box, top-left + extent, in pixels.
struct BBox {
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;

  double area() const { return w * h; }
};

// A labeled, scored, optionally localized finding from any vision stage.
struct Detection {
  std::string label;
  double score = 0;
  std::optional<BBox> bbox;
  std::string stage;
};

// Intersection over union; 0 when the union has zero area.
double iou(const BBox& a, const BBox& b);

// Greedy keep-highest-score NMS, class-aware: a candidate is kept iff its IoU
// with every already-kept candidate of the same label is below the threshold.
// Score ties resolve to the earlier input index. Output is sorted by score
// descending. All candidates must carry a bbox.
std::vector<Detection> nms(std::vector<Detection> candidates,
                           double iou_threshold);

}  // namespace drishti::vision
