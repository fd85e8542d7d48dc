#pragma once

#include <stdexcept>
#include <string>

namespace drishti {

// Error categories. Numeric values line up with the C API status codes and,
// for Config/Source/Io, with the CLI exit codes.
enum class ErrorCode {
  InvalidArgument = 1,
  Config = 2,
  Source = 3,
  Io = 4,
  Runtime = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidArgumentError : Error {
  explicit InvalidArgumentError(const std::string& w)
      : Error(ErrorCode::InvalidArgument, w) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ErrorCode::Config, w) {}
};

struct SourceError : Error {
  explicit SourceError(const std::string& w) : Error(ErrorCode::Source, w) {}
};

struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::Io, w) {}
};

struct RuntimeError : Error {
  explicit RuntimeError(const std::string& w) : Error(ErrorCode::Runtime, w) {}
};

// Source-set loading.
struct EmptySourceError : SourceError {
  explicit EmptySourceError(const std::string& w) : SourceError(w) {}
};
struct InvalidJpegError : SourceError {
  explicit InvalidJpegError(const std::string& w) : SourceError(w) {}
};

// Frame decoding.
struct JpegDecodeError : RuntimeError {
  explicit JpegDecodeError(const std::string& w) : RuntimeError(w) {}
};

// Classifier enrollment.
struct MissingClassError : ConfigError {
  explicit MissingClassError(const std::string& w) : ConfigError(w) {}
};

// YOLO grid decode.
struct DimensionMismatchError : InvalidArgumentError {
  explicit DimensionMismatchError(const std::string& w)
      : InvalidArgumentError(w) {}
};

// TTS.
struct UnsupportedLanguageError : InvalidArgumentError {
  explicit UnsupportedLanguageError(const std::string& w)
      : InvalidArgumentError(w) {}
};

// Latency report over an empty event set.
struct NoDataError : RuntimeError {
  explicit NoDataError(const std::string& w) : RuntimeError(w) {}
};

}  // namespace drishti
