#include "vision/currency.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "core/errors.hpp"
#include "core/jpeg.hpp"
#include "vision/softmax.hpp"

namespace drishti::vision {

namespace fs = std::filesystem;

std::vector<double> extract_feature(const Image& img,
                                    const FeatureSpec& spec) {
  const Image small = downsample_box(img, spec.downsample, spec.downsample);
  const int bins = spec.bins_per_channel;
  std::vector<double> feature(static_cast<std::size_t>(spec.dims()), 0.0);

  for (int y = 0; y < small.height; ++y) {
    for (int x = 0; x < small.width; ++x) {
      const auto* p = small.at(x, y);
      const Hsv hsv = rgb_to_hsv(p[0], p[1], p[2]);
      const int hb = std::min(bins - 1,
                              static_cast<int>(hsv.h / (360.0 / bins)));
      const int sb = std::min(bins - 1, static_cast<int>(hsv.s * bins));
      const int vb = std::min(bins - 1, static_cast<int>(hsv.v * bins));
      feature[static_cast<std::size_t>(hb)] += 1.0;
      feature[static_cast<std::size_t>(bins + sb)] += 1.0;
      feature[static_cast<std::size_t>(2 * bins + vb)] += 1.0;
    }
  }
  const double total = 3.0 * small.pixel_count();
  for (auto& v : feature) v /= total;
  return feature;
}

namespace {

std::vector<fs::path> class_images(const fs::path& class_dir) {
  std::vector<fs::path> files;
  std::error_code ec;
  if (!fs::is_directory(class_dir, ec)) return files;
  for (const auto& entry : fs::directory_iterator(class_dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (ext == ".jpg" || ext == ".jpeg") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<double> feature_of_file(const fs::path& file,
                                    const FeatureSpec& spec) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot read fixture: " + file.string());
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  return extract_feature(decode_jpeg(bytes), spec);
}

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace

ClassifierConfig enroll_currency(const fs::path& fixture_dir,
                                 ClassifierConfig config) {
  config.centroids.clear();
  config.centroids.reserve(config.classes.size());

  for (const auto& cls : config.classes) {
    const auto files = class_images(fixture_dir / cls);
    if (files.empty())
      throw MissingClassError("no enrollment images for class \"" + cls +
                              "\" under " + fixture_dir.string());

    std::vector<std::vector<double>> class_centroids;
    if (cls == config.background_class) {
      // Backgrounds vary too much to average; keep each enrolled scene.
      for (const auto& f : files)
        class_centroids.push_back(feature_of_file(f, config.feature));
    } else {
      std::vector<double> mean(static_cast<std::size_t>(config.feature.dims()),
                               0.0);
      for (const auto& f : files) {
        const auto feat = feature_of_file(f, config.feature);
        for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += feat[i];
      }
      for (auto& v : mean) v /= static_cast<double>(files.size());
      class_centroids.push_back(std::move(mean));
    }
    config.centroids.push_back(std::move(class_centroids));
  }
  return config;
}

CurrencyPrediction classify_currency(const Image& img,
                                     const ClassifierConfig& config) {
  if (!config.enrolled())
    throw InvalidArgumentError("classify_currency: classifier not enrolled");

  const auto feature = extract_feature(img, config.feature);
  std::vector<double> raw_scores(config.classes.size());
  for (std::size_t c = 0; c < config.classes.size(); ++c) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& centroid : config.centroids[c])
      best = std::min(best, euclidean(feature, centroid));
    raw_scores[c] = -best;
  }

  CurrencyPrediction p;
  p.scores = softmax(raw_scores, config.temperature);
  const std::size_t best = argmax(p.scores);
  p.label = config.classes[best];
  p.likelihood = p.scores[best];
  return p;
}

std::string format_likelihood(double value) {
  const double scaled = value * 100.0;
  const double fl = std::floor(scaled);
  const double frac = scaled - fl;
  long long n = static_cast<long long>(fl);
  if (frac > 0.5) {
    ++n;
  } else if (frac == 0.5 && n % 2 != 0) {
    ++n;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld.%02lld", n / 100,
                n >= 0 ? n % 100 : -(n % 100));
  return buf;
}

std::string format_prediction(const CurrencyPrediction& p,
                              std::string_view image_path, double /*elapsed_ms*/,
                              double /*step_ms*/) {
  std::string out;
  out.append(image_path);
  out.append("\n");
  out.append("This is image is a ");
  out.append(p.label);
  out.append(" - Likelihood: ");
  out.append(format_likelihood(p.likelihood));
  return out;
}

}  // namespace drishti::vision
