#include "camsim/server.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

#include <httplib.h>

#include "core/errors.hpp"

namespace drishti::camsim {

struct CamsimServer::Impl {
  SourceSet set;
  StreamConfig cfg;
  httplib::Server server;
  std::thread thread;
  std::atomic<std::size_t> capture_cursor{0};
  std::atomic<int> bound_port{0};
  std::atomic<bool> running{false};

  // Wakes streaming connections sleeping between frames so stop() is prompt.
  std::mutex stop_mutex;
  std::condition_variable stop_cv;
  bool stopping = false;

  bool wait_interval(std::chrono::milliseconds d) {
    std::unique_lock lk(stop_mutex);
    return stop_cv.wait_for(lk, d, [this] { return stopping; });
  }

  void handle_capture(const httplib::Request&, httplib::Response& res) {
    const std::size_t n = set.images.size();
    std::size_t idx = capture_cursor.fetch_add(1);
    if (set.loop) {
      idx %= n;
    } else if (idx >= n) {
      res.status = 410;
      res.set_content("source exhausted", "text/plain");
      return;
    }
    const auto& payload = set.images[idx];
    res.set_content(reinterpret_cast<const char*>(payload.data()),
                    payload.size(), "image/jpeg");
  }

  void handle_stream(const httplib::Request&, httplib::Response& res) {
    const std::string content_type =
        "multipart/x-mixed-replace; boundary=" + cfg.boundary;
    // Cursor and pacing state live in the provider; each connection gets its
    // own copy.
    auto cursor = std::make_shared<std::size_t>(0);
    auto first = std::make_shared<bool>(true);
    res.set_content_provider(
        content_type,
        [this, cursor, first](std::size_t, httplib::DataSink& sink) {
          const std::size_t n = set.images.size();
          if (!*first) {
            if (wait_interval(set.frame_interval)) return false;
          }
          *first = false;
          if (stopping) return false;

          std::size_t idx = *cursor;
          if (set.loop) idx %= n;
          if (idx >= n) {
            const auto tail = multipart_terminator(cfg.boundary);
            sink.write(tail.data(), tail.size());
            sink.done();
            return false;
          }
          const auto part = multipart_part(cfg.boundary, set.images[idx]);
          if (!sink.write(part.data(), part.size())) return false;
          ++*cursor;
          return true;
        });
  }
};

CamsimServer::CamsimServer(SourceSet set, StreamConfig cfg)
    : impl_(std::make_unique<Impl>()) {
  if (set.images.empty())
    throw EmptySourceError("camsim started with an empty source set");
  if (!valid_boundary_token(cfg.boundary))
    throw InvalidArgumentError("invalid boundary token: " + cfg.boundary);
  impl_->set = std::move(set);
  impl_->cfg = std::move(cfg);
}

CamsimServer::~CamsimServer() {
  try {
    stop();
  } catch (...) {
  }
}

void CamsimServer::start() {
  auto* impl = impl_.get();
  if (impl->running) return;

  impl->server.Get(impl->cfg.capture_path,
                   [impl](const httplib::Request& req, httplib::Response& res) {
                     impl->handle_capture(req, res);
                   });
  impl->server.Get(impl->cfg.stream_path,
                   [impl](const httplib::Request& req, httplib::Response& res) {
                     impl->handle_stream(req, res);
                   });

  int port = impl->cfg.port;
  if (port == 0) {
    port = impl->server.bind_to_any_port("0.0.0.0");
    if (port < 0) throw SourceError("camsim: failed to bind ephemeral port");
  } else {
    if (!impl->server.bind_to_port("0.0.0.0", port))
      throw SourceError("camsim: failed to bind port " + std::to_string(port));
  }
  impl->bound_port = port;

  impl->thread = std::thread([impl] { impl->server.listen_after_bind(); });
  impl->server.wait_until_ready();
  impl->running = true;
}

void CamsimServer::stop() {
  auto* impl = impl_.get();
  if (!impl->running) return;
  {
    std::lock_guard lk(impl->stop_mutex);
    impl->stopping = true;
  }
  impl->stop_cv.notify_all();
  impl->server.stop();
  if (impl->thread.joinable()) impl->thread.join();
  impl->running = false;
}

int CamsimServer::port() const { return impl_->bound_port; }

std::size_t CamsimServer::frame_count() const {
  return impl_->set.images.size();
}

const StreamConfig& CamsimServer::config() const { return impl_->cfg; }

}  // namespace drishti::camsim
