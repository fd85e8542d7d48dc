#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "core/clock.hpp"
#include "ingest/frame_bus.hpp"

namespace drishti::ingest {

struct SessionReport {
  std::uint64_t frames_ingested = 0;
  std::uint64_t parse_errors = 0;
  std::uint64_t decode_errors = 0;
  std::uint64_t reconnects = 0;
  bool source_exhausted = false;  // dir:// replay reached the end
};

struct BackoffPolicy {
  std::chrono::milliseconds base{250};
  double factor = 2.0;
  std::chrono::milliseconds cap{8000};
};

struct SessionOptions {
  BackoffPolicy backoff;
  // Used when the stream response carries no boundary parameter.
  std::string fallback_boundary = "drishtiframe";
  // Real-time sources drop-oldest; dir:// replay waits for room instead.
  bool lossless_push = false;
};

// Connects to `source`, parses the MJPEG stream, decodes frames, stamps ids
// and capture timestamps, and pushes them onto the bus. Network errors and
// stream closures are retried with exponential backoff until cancelled;
// cancellation is the only terminal outcome for http sources. A `dir://path`
// source replays the directory once through the same stamping path and then
// closes the bus.
SessionReport stream_session(const std::string& source, FrameBus& bus,
                             CancellationToken& cancel,
                             const SessionOptions& options = {});

}  // namespace drishti::ingest
