#include "camsim/multipart.hpp"

#include <cctype>

namespace drishti::camsim {

bool valid_boundary_token(std::string_view boundary) {
  if (boundary.empty() || boundary.size() > 70) return false;
  for (unsigned char c : boundary) {
    if (!std::isalnum(c) && c != '-' && c != '_' && c != '.' && c != '+')
      return false;
  }
  return true;
}

std::string multipart_part(std::string_view boundary,
                           std::span<const std::uint8_t> payload) {
  std::string out;
  out.reserve(boundary.size() + payload.size() + 80);
  out.append("\r\n--").append(boundary).append("\r\n");
  out.append("Content-Type: image/jpeg\r\n");
  out.append("Content-Length: ")
      .append(std::to_string(payload.size()))
      .append("\r\n\r\n");
  out.append(reinterpret_cast<const char*>(payload.data()), payload.size());
  return out;
}

std::string multipart_terminator(std::string_view boundary) {
  std::string out;
  out.append("\r\n--").append(boundary).append("--\r\n");
  return out;
}

}  // namespace drishti::camsim
