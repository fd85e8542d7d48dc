#include "ingest/multipart_parser.hpp"

#include <algorithm>
#include <cctype>

#include "core/errors.hpp"

namespace drishti::ingest {

namespace {

constexpr std::size_t kHeaderCap = 64u << 10;

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

const char* parse_error_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedPart:
      return "MalformedPart";
    case ParseErrorKind::BoundaryNotFound:
      return "BoundaryNotFound";
    case ParseErrorKind::TruncatedPart:
      return "TruncatedPart";
  }
  return "ParseError";
}

MultipartParser::MultipartParser(std::string boundary, std::size_t scan_budget)
    : delim_("\r\n--" + boundary), scan_budget_(scan_budget) {}

void MultipartParser::fail(ParseErrorKind kind, std::string message) {
  state_ = State::Failed;
  failure_ = ParseFailure{kind, std::move(message)};
  buf_.clear();
}

bool MultipartParser::feed(std::span<const std::uint8_t> chunk,
                           std::vector<std::vector<std::uint8_t>>& out) {
  if (state_ == State::Failed || state_ == State::Done) return false;
  buf_.append(reinterpret_cast<const char*>(chunk.data()), chunk.size());
  while (step(out)) {
  }
  return state_ != State::Failed && state_ != State::Done;
}

bool MultipartParser::step(std::vector<std::vector<std::uint8_t>>& out) {
  switch (state_) {
    case State::SeekFirst:
    case State::SeekNext: {
      // The stream may open with "--boundary" without the leading CRLF.
      if (state_ == State::SeekFirst && at_stream_start_ &&
          buf_.size() >= delim_.size() - 2) {
        if (buf_.compare(0, delim_.size() - 2, delim_, 2,
                         delim_.size() - 2) == 0) {
          buf_.erase(0, delim_.size() - 2);
          at_stream_start_ = false;
          state_ = State::AfterDelim;
          return true;
        }
      }
      const auto pos = buf_.find(delim_);
      if (pos != std::string::npos) {
        buf_.erase(0, pos + delim_.size());
        at_stream_start_ = false;
        state_ = State::AfterDelim;
        return true;
      }
      if (buf_.size() > scan_budget_) {
        fail(ParseErrorKind::BoundaryNotFound,
             "no boundary delimiter within scan budget");
        return false;
      }
      // Keep only a tail that could still hold a partial delimiter.
      if (buf_.size() > delim_.size()) {
        buf_.erase(0, buf_.size() - delim_.size());
        if (!buf_.empty()) at_stream_start_ = false;
      }
      return false;
    }

    case State::AfterDelim: {
      if (buf_.size() < 2) return false;
      if (buf_[0] == '-' && buf_[1] == '-') {
        state_ = State::Done;
        buf_.clear();
        return false;
      }
      if (buf_[0] == '\r' && buf_[1] == '\n') {
        buf_.erase(0, 2);
        state_ = State::Headers;
        return true;
      }
      fail(ParseErrorKind::MalformedPart,
           "unexpected bytes after boundary delimiter");
      return false;
    }

    case State::Headers: {
      const auto blank = buf_.find("\r\n\r\n");
      const auto next_delim = buf_.find(delim_);
      if (next_delim != std::string::npos &&
          (blank == std::string::npos || next_delim < blank)) {
        fail(ParseErrorKind::MalformedPart,
             "missing blank line between part headers and body");
        return false;
      }
      if (blank == std::string::npos) {
        if (buf_.size() > kHeaderCap) {
          fail(ParseErrorKind::MalformedPart, "part header block too large");
        }
        return false;
      }
      std::optional<std::size_t> content_length;
      std::size_t line_start = 0;
      while (line_start < blank) {
        auto line_end = buf_.find("\r\n", line_start);
        if (line_end == std::string::npos || line_end > blank) line_end = blank;
        const std::string line = buf_.substr(line_start, line_end - line_start);
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
          fail(ParseErrorKind::MalformedPart, "header line without colon");
          return false;
        }
        const std::string name = to_lower(line.substr(0, colon));
        if (name == "content-length") {
          std::size_t value = 0;
          auto v = line.substr(colon + 1);
          const auto first = v.find_first_not_of(" \t");
          if (first == std::string::npos) {
            fail(ParseErrorKind::MalformedPart, "empty Content-Length");
            return false;
          }
          v = v.substr(first);
          for (char c : v) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
              fail(ParseErrorKind::MalformedPart,
                   "non-numeric Content-Length");
              return false;
            }
            value = value * 10 + static_cast<std::size_t>(c - '0');
          }
          content_length = value;
        }
        line_start = line_end + 2;
      }
      buf_.erase(0, blank + 4);
      if (content_length) {
        body_needed_ = *content_length;
        state_ = State::BodyLen;
      } else {
        state_ = State::BodySeek;
      }
      return true;
    }

    case State::BodyLen: {
      if (buf_.size() < body_needed_) return false;
      out.emplace_back(buf_.begin(),
                       buf_.begin() + static_cast<std::ptrdiff_t>(body_needed_));
      buf_.erase(0, body_needed_);
      body_needed_ = 0;
      state_ = State::SeekNext;
      return true;
    }

    case State::BodySeek: {
      const auto pos = buf_.find(delim_);
      if (pos == std::string::npos) {
        if (buf_.size() > scan_budget_) {
          fail(ParseErrorKind::BoundaryNotFound,
               "no boundary delimiter within scan budget");
        }
        return false;
      }
      out.emplace_back(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(pos));
      buf_.erase(0, pos);
      state_ = State::SeekNext;
      return true;
    }

    case State::Done:
    case State::Failed:
      return false;
  }
  return false;
}

void MultipartParser::finish() {
  switch (state_) {
    case State::SeekFirst:
      if (!at_stream_start_ || !buf_.empty()) {
        fail(ParseErrorKind::BoundaryNotFound,
             "stream ended before the first boundary");
      } else {
        state_ = State::Done;
      }
      break;
    case State::AfterDelim:
    case State::Headers:
      fail(ParseErrorKind::TruncatedPart, "stream ended inside part headers");
      break;
    case State::BodyLen:
    case State::BodySeek:
      fail(ParseErrorKind::TruncatedPart, "stream ended inside a part body");
      break;
    case State::SeekNext:
      state_ = State::Done;
      buf_.clear();
      break;
    case State::Done:
    case State::Failed:
      break;
  }
}

std::vector<std::vector<std::uint8_t>> parse_multipart(
    std::span<const std::uint8_t> stream, std::string_view boundary) {
  MultipartParser parser{std::string(boundary)};
  std::vector<std::vector<std::uint8_t>> parts;
  parser.feed(stream, parts);
  parser.finish();
  if (parser.failure()) {
    const auto& f = *parser.failure();
    throw RuntimeError(std::string(parse_error_name(f.kind)) + ": " +
                       f.message);
  }
  return parts;
}

}  // namespace drishti::ingest
