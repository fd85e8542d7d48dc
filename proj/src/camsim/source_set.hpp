#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace drishti::camsim {

// The simulated capture source: an ordered list of JPEG payloads served in
// filename order, optionally looping at a fixed frame interval.
struct SourceSet {
  std::vector<std::vector<std::uint8_t>> images;
  bool loop = true;
  std::chrono::milliseconds frame_interval{500};
};

// Loads every .jpg/.jpeg in `dir` in lexicographic filename order. Each
// payload must carry the SOI/EOI markers. Throws EmptySourceError when no
// JPEG files are found and InvalidJpegError (naming the file) on a marker
// failure.
SourceSet load_source_set(const std::filesystem::path& dir);

}  // namespace drishti::camsim
