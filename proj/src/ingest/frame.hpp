#pragma once

#include <cstdint>
#include <vector>

#include "core/image.hpp"

namespace drishti::ingest {

// One captured image flowing through the pipeline. ids are assigned by the
// ingest session and are strictly increasing within a session; the decoded
// raster is shared read-only by all vision stages.
struct Frame {
  std::uint64_t id = 0;
  std::int64_t capture_ts_ms = 0;
  std::vector<std::uint8_t> payload;  // encoded JPEG as received
  Image image;                        // decoded RGB raster

  int width() const { return image.width; }
  int height() const { return image.height; }
};

}  // namespace drishti::ingest
