#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace drishti::camsim {

struct StreamConfig {
  std::string boundary = "drishtiframe";
  int port = 8080;
  std::string capture_path = "/capture";
  std::string stream_path = "/stream";
};

// Conservative subset of the MIME bchars grammar: alnum plus "-_.+",
// 1..70 chars.
bool valid_boundary_token(std::string_view boundary);

// One stream part, bit-exact:
//   \r\n--<boundary>\r\nContent-Type: image/jpeg\r\n
//   Content-Length: <n>\r\n\r\n<payload>
std::string multipart_part(std::string_view boundary,
                           std::span<const std::uint8_t> payload);

// Final delimiter when the set is exhausted: \r\n--<boundary>--\r\n
std::string multipart_terminator(std::string_view boundary);

}  // namespace drishti::camsim
