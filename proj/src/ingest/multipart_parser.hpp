#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace drishti::ingest {

enum class ParseErrorKind {
  MalformedPart,    // no blank line between headers and body
  BoundaryNotFound, // no delimiter within the scan budget
  TruncatedPart,    // stream ended mid-part
};

struct ParseFailure {
  ParseErrorKind kind;
  std::string message;
};

const char* parse_error_name(ParseErrorKind kind);

// Incremental multipart/x-mixed-replace parser. Feed arbitrary chunks; part
// bodies come out byte-identical and in stream order. Honors Content-Length
// when present, falls back to delimiter scanning otherwise.
class MultipartParser {
 public:
  static constexpr std::size_t kDefaultScanBudget = 16u << 20;  // 16 MiB

  explicit MultipartParser(std::string boundary,
                           std::size_t scan_budget = kDefaultScanBudget);

  // Consumes a chunk, appending completed bodies to `out`. Returns false once
  // the parser has failed or has seen the final terminator.
  bool feed(std::span<const std::uint8_t> chunk,
            std::vector<std::vector<std::uint8_t>>& out);

  // Signals end of stream. A cut mid-part surfaces as TruncatedPart; a cut on
  // a part boundary is a clean end.
  void finish();

  const std::optional<ParseFailure>& failure() const { return failure_; }
  bool terminated() const { return state_ == State::Done; }

 private:
  enum class State {
    SeekFirst,   // before the first delimiter
    AfterDelim,  // just matched "--boundary", expect "--" or CRLF
    Headers,     // accumulating header block
    BodyLen,     // body with known Content-Length
    BodySeek,    // body delimited by the next boundary
    SeekNext,    // between parts
    Done,
    Failed,
  };

  void fail(ParseErrorKind kind, std::string message);
  bool step(std::vector<std::vector<std::uint8_t>>& out);

  std::string delim_;        // "\r\n--" + boundary
  std::size_t scan_budget_;
  std::string buf_;
  State state_ = State::SeekFirst;
  bool at_stream_start_ = true;
  std::size_t body_needed_ = 0;
  std::optional<ParseFailure> failure_;
};

// One-shot convenience over the incremental parser. Throws RuntimeError with
// the parse-error name on failure.
std::vector<std::vector<std::uint8_t>> parse_multipart(
    std::span<const std::uint8_t> stream, std::string_view boundary);

}  // namespace drishti::ingest
