#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>

#include "ingest/frame.hpp"

namespace drishti::ingest {

// Bounded frame queue with drop-oldest backpressure: push never blocks and
// never fails; when full, the stalest frame is evicted so the consumer always
// sees the most recent scene. Safe for one producer and one consumer.
class FrameBus {
 public:
  struct PushResult {
    bool dropped_oldest = false;
    std::uint64_t dropped_id = 0;
  };

  struct Counters {
    std::uint64_t enqueued = 0;
    std::uint64_t dropped = 0;
    std::uint64_t dequeued = 0;
    std::size_t occupancy = 0;
  };

  explicit FrameBus(std::size_t capacity);

  // Real-time producer path: total, never blocks.
  PushResult push(Frame frame);

  // Offline replay path: waits for room instead of dropping, so directory
  // replays are lossless. Returns false if the bus closed while waiting.
  bool push_wait(Frame frame);

  std::optional<Frame> pop(std::chrono::milliseconds timeout);
  std::optional<Frame> try_pop();

  // Producer-side end of stream; consumers drain what is left.
  void close();
  bool closed_and_empty() const;

  Counters counters() const;
  std::size_t capacity() const { return capacity_; }

 private:
  const std::size_t capacity_;
  mutable std::mutex m_;
  std::condition_variable cv_pop_;
  std::condition_variable cv_push_;
  std::deque<Frame> q_;
  Counters c_;
  bool closed_ = false;
};

}  // namespace drishti::ingest
