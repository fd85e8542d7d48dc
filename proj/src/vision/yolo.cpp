#include "vision/yolo.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "core/errors.hpp"
#include "vision/softmax.hpp"

namespace drishti::vision {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::uint32_t read_u32_le(std::istream& in) {
  std::uint8_t b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_u32_le(std::ostream& out, std::uint32_t v) {
  std::uint8_t b[4] = {
      static_cast<std::uint8_t>(v & 0xFF),
      static_cast<std::uint8_t>((v >> 8) & 0xFF),
      static_cast<std::uint8_t>((v >> 16) & 0xFF),
      static_cast<std::uint8_t>((v >> 24) & 0xFF),
  };
  out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

std::size_t GridSpec::index(int y, int x, int anchor, int channel) const {
  return ((static_cast<std::size_t>(y) * cells_x + x) * anchors.size() +
          anchor) *
             channels() +
         channel;
}

std::size_t GridSpec::expected_size() const {
  return static_cast<std::size_t>(cells_y) * cells_x * anchors.size() *
         channels();
}

std::vector<Detection> decode_yolo(
    const GridSpec& grid, int image_w, int image_h, double conf_threshold,
    const std::vector<std::string>& class_names) {
  if (grid.cells_x * grid.stride != image_w ||
      grid.cells_y * grid.stride != image_h) {
    throw DimensionMismatchError(
        "grid " + std::to_string(grid.cells_x) + "x" +
        std::to_string(grid.cells_y) + " at stride " +
        std::to_string(grid.stride) + " does not cover image " +
        std::to_string(image_w) + "x" + std::to_string(image_h));
  }
  if (grid.logits.size() != grid.expected_size())
    throw DimensionMismatchError("grid logits size mismatch");
  if (class_names.size() != static_cast<std::size_t>(grid.num_classes))
    throw DimensionMismatchError(
        "class-name list has " + std::to_string(class_names.size()) +
        " entries for " + std::to_string(grid.num_classes) + " classes");

  std::vector<Detection> out;
  const double s = grid.stride;
  for (int cy = 0; cy < grid.cells_y; ++cy) {
    for (int cx = 0; cx < grid.cells_x; ++cx) {
      for (std::size_t a = 0; a < grid.anchors.size(); ++a) {
        const int ai = static_cast<int>(a);
        const double tx = grid.at(cy, cx, ai, 0);
        const double ty = grid.at(cy, cx, ai, 1);
        const double tw = grid.at(cy, cx, ai, 2);
        const double th = grid.at(cy, cx, ai, 3);
        const double to = grid.at(cy, cx, ai, 4);

        std::size_t best = 0;
        double best_logit = grid.at(cy, cx, ai, 5);
        for (int j = 1; j < grid.num_classes; ++j) {
          const double l = grid.at(cy, cx, ai, 5 + j);
          if (l > best_logit) {
            best_logit = l;
            best = static_cast<std::size_t>(j);
          }
        }
        const double score = sigmoid(to) * sigmoid(best_logit);
        if (score < conf_threshold) continue;

        const double center_x = (2 * sigmoid(tx) - 0.5 + cx) * s;
        const double center_y = (2 * sigmoid(ty) - 0.5 + cy) * s;
        const double bw = std::pow(2 * sigmoid(tw), 2) * grid.anchors[a][0];
        const double bh = std::pow(2 * sigmoid(th), 2) * grid.anchors[a][1];

        Detection det;
        det.label = class_names[best];
        det.score = score;
        det.bbox = BBox{center_x - bw / 2, center_y - bh / 2, bw, bh};
        det.stage = "objects";
        out.push_back(std::move(det));
      }
    }
  }
  return out;
}

GridSpec read_grid_tensor(const std::filesystem::path& path, int stride,
                          std::vector<std::array<double, 2>> anchors) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open tensor file: " + path.string());

  const std::uint32_t rank = read_u32_le(in);
  if (!in || rank != 4)
    throw DimensionMismatchError("tensor file must have rank 4, got " +
                                 std::to_string(rank));
  std::uint32_t dims[4];
  for (auto& d : dims) d = read_u32_le(in);
  if (!in) throw IoError("truncated tensor header: " + path.string());

  GridSpec grid;
  grid.stride = stride;
  grid.cells_y = static_cast<int>(dims[0]);
  grid.cells_x = static_cast<int>(dims[1]);
  if (dims[2] != anchors.size())
    throw DimensionMismatchError(
        "tensor has " + std::to_string(dims[2]) + " anchor slots, config has " +
        std::to_string(anchors.size()));
  grid.anchors = std::move(anchors);
  if (dims[3] < 6)
    throw DimensionMismatchError("tensor channel dim must be >= 6");
  grid.num_classes = static_cast<int>(dims[3]) - 5;

  grid.logits.resize(grid.expected_size());
  in.read(reinterpret_cast<char*>(grid.logits.data()),
          static_cast<std::streamsize>(grid.logits.size() * sizeof(float)));
  if (!in) throw IoError("truncated tensor payload: " + path.string());
  return grid;
}

void write_grid_tensor(const std::filesystem::path& path,
                       const GridSpec& grid) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write tensor file: " + path.string());
  write_u32_le(out, 4);
  write_u32_le(out, static_cast<std::uint32_t>(grid.cells_y));
  write_u32_le(out, static_cast<std::uint32_t>(grid.cells_x));
  write_u32_le(out, static_cast<std::uint32_t>(grid.anchors.size()));
  write_u32_le(out, static_cast<std::uint32_t>(grid.channels()));
  out.write(reinterpret_cast<const char*>(grid.logits.data()),
            static_cast<std::streamsize>(grid.logits.size() * sizeof(float)));
  if (!out) throw IoError("failed writing tensor file: " + path.string());
}

}  // namespace drishti::vision
