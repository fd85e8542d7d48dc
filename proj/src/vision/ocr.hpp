#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/image.hpp"
#include "vision/geometry.hpp"

namespace drishti::vision {

// 5x7 glyph, one byte per row, bit 4 = leftmost column.
struct Glyph {
  std::array<std::uint8_t, 7> rows;
};

// Fixed bitmap font over A-Z and 0-9 used by the reference OCR stage.
class FontTable {
 public:
  static const FontTable& builtin();

  const Glyph* glyph(char c) const;
  std::optional<char> match(const std::array<std::uint8_t, 7>& cell) const;
  const std::string& alphabet() const { return alphabet_; }

  static constexpr int kGlyphW = 5;
  static constexpr int kGlyphH = 7;
  static constexpr int kCellW = 6;  // glyph + 1px gutter
  static constexpr int kCellH = 8;

 private:
  FontTable();
  std::string alphabet_;
  std::array<Glyph, 36> glyphs_;
};

struct TextLine {
  std::string text;
  BBox bbox;
};

// Binarize at luma 128, scan the fixed 6x8 cell grid from the origin, and
// exact-match cells against the font; unmatched cells read as spaces. Rows
// that contain no glyphs produce no entry.
std::vector<TextLine> recognize_text(const Image& img,
                                     const FontTable& font = FontTable::builtin());

// Renders lines of font-alphabet text (plus spaces) into a white raster with
// black ink on the same 6x8 grid recognize_text scans.
Image render_text(const std::vector<std::string>& lines,
                  const FontTable& font = FontTable::builtin());
Image render_text(std::string_view line,
                  const FontTable& font = FontTable::builtin());

}  // namespace drishti::vision
