#pragma once

#include <memory>

#include "camsim/multipart.hpp"
#include "camsim/source_set.hpp"

namespace drishti::camsim {

// Protocol-level stand-in for the ESP32-CAM web server. Serves
// GET <capture_path> (one JPEG per request, shared advancing cursor) and
// GET <stream_path> (multipart/x-mixed-replace, one independent cursor per
// connection). The SourceSet is immutable once the server starts.
class CamsimServer {
 public:
  CamsimServer(SourceSet set, StreamConfig cfg);
  ~CamsimServer();

  CamsimServer(const CamsimServer&) = delete;
  CamsimServer& operator=(const CamsimServer&) = delete;

  // Binds and serves on a background thread. cfg.port == 0 picks an
  // ephemeral port. Throws SourceError if the port cannot be bound.
  void start();
  void stop();

  int port() const;
  std::size_t frame_count() const;
  const StreamConfig& config() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace drishti::camsim
