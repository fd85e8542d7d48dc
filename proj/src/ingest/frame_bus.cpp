#include "ingest/frame_bus.hpp"

#include "core/errors.hpp"

namespace drishti::ingest {

FrameBus::FrameBus(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0)
    throw InvalidArgumentError("FrameBus capacity must be positive");
}

FrameBus::PushResult FrameBus::push(Frame frame) {
  PushResult result;
  {
    std::lock_guard lk(m_);
    if (q_.size() == capacity_) {
      result.dropped_oldest = true;
      result.dropped_id = q_.front().id;
      q_.pop_front();
      ++c_.dropped;
    }
    q_.push_back(std::move(frame));
    ++c_.enqueued;
    c_.occupancy = q_.size();
  }
  cv_pop_.notify_one();
  return result;
}

bool FrameBus::push_wait(Frame frame) {
  {
    std::unique_lock lk(m_);
    cv_push_.wait(lk, [this] { return q_.size() < capacity_ || closed_; });
    if (closed_) return false;
    q_.push_back(std::move(frame));
    ++c_.enqueued;
    c_.occupancy = q_.size();
  }
  cv_pop_.notify_one();
  return true;
}

std::optional<Frame> FrameBus::pop(std::chrono::milliseconds timeout) {
  std::unique_lock lk(m_);
  if (!cv_pop_.wait_for(lk, timeout,
                        [this] { return !q_.empty() || closed_; }))
    return std::nullopt;
  if (q_.empty()) return std::nullopt;  // closed and drained
  Frame f = std::move(q_.front());
  q_.pop_front();
  ++c_.dequeued;
  c_.occupancy = q_.size();
  lk.unlock();
  cv_push_.notify_one();
  return f;
}

std::optional<Frame> FrameBus::try_pop() {
  std::unique_lock lk(m_);
  if (q_.empty()) return std::nullopt;
  Frame f = std::move(q_.front());
  q_.pop_front();
  ++c_.dequeued;
  c_.occupancy = q_.size();
  lk.unlock();
  cv_push_.notify_one();
  return f;
}

void FrameBus::close() {
  {
    std::lock_guard lk(m_);
    closed_ = true;
  }
  cv_pop_.notify_all();
  cv_push_.notify_all();
}

bool FrameBus::closed_and_empty() const {
  std::lock_guard lk(m_);
  return closed_ && q_.empty();
}

FrameBus::Counters FrameBus::counters() const {
  std::lock_guard lk(m_);
  return c_;
}

}  // namespace drishti::ingest
