#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <string>

namespace drishti {

// Monotonic milliseconds since an arbitrary epoch. All pipeline timestamps
// (frame capture, announcement creation, playback intervals) use this clock.
inline std::int64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch())
      .count();
}

// Wall-clock UTC timestamp, e.g. "2026-08-10T12:34:56.789Z". Used only for
// transcript lines; never fed back into latency math.
std::string iso8601_utc_now();

// Cooperative shutdown signal shared between the pipeline loop, the stream
// session and the camsim server. wait_for returns true when cancelled.
class CancellationToken {
 public:
  void cancel() {
    {
      std::lock_guard lk(m_);
      cancelled_ = true;
    }
    cv_.notify_all();
  }

  bool cancelled() const {
    std::lock_guard lk(m_);
    return cancelled_;
  }

  bool wait_for(std::chrono::milliseconds d) const {
    std::unique_lock lk(m_);
    return cv_.wait_for(lk, d, [this] { return cancelled_; });
  }

 private:
  mutable std::mutex m_;
  mutable std::condition_variable cv_;
  bool cancelled_ = false;
};

}  // namespace drishti
