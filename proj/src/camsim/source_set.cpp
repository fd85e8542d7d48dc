#include "camsim/source_set.hpp"

#include <algorithm>
#include <fstream>

#include "core/errors.hpp"
#include "core/jpeg.hpp"

namespace drishti::camsim {

namespace fs = std::filesystem;

namespace {

bool has_jpeg_extension(const fs::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".jpg" || ext == ".jpeg";
}

std::vector<std::uint8_t> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

SourceSet load_source_set(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    throw SourceError("source directory not found: " + dir.string());

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && has_jpeg_extension(entry.path()))
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });

  if (files.empty())
    throw EmptySourceError("no JPEG files in " + dir.string());

  SourceSet set;
  set.images.reserve(files.size());
  for (const auto& f : files) {
    auto bytes = read_file(f);
    if (!looks_like_jpeg(bytes))
      throw InvalidJpegError("not a JPEG (marker check failed): " +
                             f.filename().string());
    set.images.push_back(std::move(bytes));
  }
  return set;
}

}  // namespace drishti::camsim
