#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/image.hpp"

namespace drishti {

// SOI prefix / EOI suffix marker check. This is the camsim-side validation;
// it never inspects the entitled stream beyond the first and last two bytes.
bool looks_like_jpeg(std::span<const std::uint8_t> payload);

// Baseline-JPEG decode to an RGB raster. Progressive streams and any decode
// failure raise JpegDecodeError.
Image decode_jpeg(std::span<const std::uint8_t> payload);

// Baseline-JPEG encode, used by fixture tooling and tests.
std::vector<std::uint8_t> encode_jpeg(const Image& img, int quality = 92);

}  // namespace drishti
