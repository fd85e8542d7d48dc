#include "ingest/stream_session.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>

#include <httplib.h>

#include "camsim/source_set.hpp"
#include "core/errors.hpp"
#include "core/jpeg.hpp"
#include "ingest/multipart_parser.hpp"

namespace drishti::ingest {

namespace {

struct HttpTarget {
  std::string host;
  int port = 80;
  std::string path = "/";
};

HttpTarget parse_http_url(const std::string& url) {
  const std::string scheme = "http://";
  if (url.rfind(scheme, 0) != 0)
    throw SourceError("unsupported source url: " + url);
  HttpTarget t;
  auto rest = url.substr(scheme.size());
  const auto slash = rest.find('/');
  std::string authority = rest.substr(0, slash);
  if (slash != std::string::npos) t.path = rest.substr(slash);
  const auto colon = authority.find(':');
  if (colon == std::string::npos) {
    t.host = authority;
  } else {
    t.host = authority.substr(0, colon);
    t.port = std::stoi(authority.substr(colon + 1));
  }
  if (t.host.empty()) throw SourceError("source url has no host: " + url);
  return t;
}

std::string boundary_from_content_type(const std::string& content_type) {
  const auto pos = content_type.find("boundary=");
  if (pos == std::string::npos) return {};
  std::string b = content_type.substr(pos + 9);
  const auto semi = b.find(';');
  if (semi != std::string::npos) b = b.substr(0, semi);
  while (!b.empty() && (b.back() == ' ' || b.back() == '"')) b.pop_back();
  while (!b.empty() && (b.front() == ' ' || b.front() == '"')) b.erase(0, 1);
  return b;
}

SessionReport replay_directory(const std::string& dir, FrameBus& bus,
                               CancellationToken& cancel,
                               const SessionOptions& options) {
  SessionReport report;
  const auto set = camsim::load_source_set(dir);
  std::uint64_t next_id = 1;
  for (const auto& payload : set.images) {
    if (cancel.cancelled()) break;
    Frame frame;
    frame.id = next_id;
    frame.capture_ts_ms = now_ms();
    frame.payload = payload;
    try {
      frame.image = decode_jpeg(frame.payload);
    } catch (const JpegDecodeError&) {
      ++report.decode_errors;
      continue;
    }
    ++next_id;
    bool stored = true;
    if (options.lossless_push) {
      stored = bus.push_wait(std::move(frame));
    } else {
      bus.push(std::move(frame));
    }
    if (!stored) break;  // bus closed underneath us
    ++report.frames_ingested;
  }
  report.source_exhausted = true;
  bus.close();
  return report;
}

}  // namespace

SessionReport stream_session(const std::string& source, FrameBus& bus,
                             CancellationToken& cancel,
                             const SessionOptions& options) {
  const std::string dir_scheme = "dir://";
  if (source.rfind(dir_scheme, 0) == 0)
    return replay_directory(source.substr(dir_scheme.size()), bus, cancel,
                            options);

  const auto target = parse_http_url(source);
  SessionReport report;
  std::uint64_t next_id = 1;
  auto delay = options.backoff.base;
  bool first_attempt = true;

  // A blocked socket read cannot observe the token, so a watcher closes the
  // active connection when cancellation arrives.
  std::mutex client_mu;
  std::shared_ptr<httplib::Client> active_client;
  std::atomic<bool> watcher_done{false};
  std::thread watcher([&] {
    while (!watcher_done) {
      if (cancel.wait_for(std::chrono::milliseconds(25))) break;
    }
    std::lock_guard lk(client_mu);
    if (active_client) active_client->stop();
  });

  while (!cancel.cancelled()) {
    if (!first_attempt) {
      ++report.reconnects;
      if (cancel.wait_for(delay)) break;
      auto next = std::chrono::milliseconds(
          static_cast<std::int64_t>(delay.count() * options.backoff.factor));
      delay = std::min(next, options.backoff.cap);
    }
    first_attempt = false;

    auto client = std::make_shared<httplib::Client>(target.host, target.port);
    client->set_connection_timeout(2, 0);
    client->set_read_timeout(60, 0);
    {
      std::lock_guard lk(client_mu);
      active_client = client;
    }

    std::optional<MultipartParser> parser;
    std::vector<std::vector<std::uint8_t>> parts;
    std::uint64_t frames_this_connection = 0;

    client->Get(
        target.path,
        [&](const httplib::Response& res) {
          std::string boundary = boundary_from_content_type(
              res.get_header_value("Content-Type"));
          if (boundary.empty()) boundary = options.fallback_boundary;
          parser.emplace(boundary);
          return res.status == 200;
        },
        [&](const char* data, std::size_t len) {
          if (cancel.cancelled()) return false;
          parts.clear();
          const bool more = parser->feed(
              std::span(reinterpret_cast<const std::uint8_t*>(data), len),
              parts);
          for (auto& payload : parts) {
            Frame frame;
            frame.id = next_id;
            frame.capture_ts_ms = now_ms();
            frame.payload = std::move(payload);
            try {
              frame.image = decode_jpeg(frame.payload);
            } catch (const JpegDecodeError&) {
              ++report.decode_errors;
              continue;
            }
            ++next_id;
            bus.push(std::move(frame));
            ++report.frames_ingested;
            ++frames_this_connection;
          }
          if (!more) {
            if (parser->failure()) ++report.parse_errors;
            return false;  // clean terminator or parse failure: reconnect
          }
          return true;
        });

    {
      std::lock_guard lk(client_mu);
      active_client.reset();
    }

    // A connection ended mid-stream can leave a dangling part.
    if (parser && !parser->terminated() && !parser->failure()) {
      parser->finish();
      if (parser->failure()) ++report.parse_errors;
    }
    if (frames_this_connection > 0) delay = options.backoff.base;
  }

  watcher_done = true;
  if (watcher.joinable()) watcher.join();
  return report;
}

}  // namespace drishti::ingest
