#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "core/image.hpp"

namespace drishti::vision {

// Feature: concatenated 8-bin-per-channel HSV histograms over the image
// downsampled to 32x32; 24 dims, L1-normalized as one vector.
struct FeatureSpec {
  int downsample = 32;
  int bins_per_channel = 8;

  int dims() const { return 3 * bins_per_channel; }
};

// Reference currency classifier config: one centroid per class, except the
// background class which keeps one centroid per enrolled image (nearest
// wins). Class-list order is the tie-break order.
struct ClassifierConfig {
  std::vector<std::string> classes = {"10",  "20",  "50",   "100",
                                      "200", "500", "2000", "Background"};
  std::string background_class = "Background";
  double temperature = 0.05;
  FeatureSpec feature;
  std::vector<std::vector<std::vector<double>>> centroids;  // [class][k][dim]

  bool enrolled() const { return !centroids.empty(); }
};

struct CurrencyPrediction {
  std::string label;
  double likelihood = 0;
  std::vector<double> scores;  // per-class probabilities, class-list order
};

std::vector<double> extract_feature(const Image& img, const FeatureSpec& spec);

// Enrolls fixtures/<class>/<n>.jpg trees. Throws MissingClassError when a
// class subdirectory is absent or holds no images.
ClassifierConfig enroll_currency(const std::filesystem::path& fixture_dir,
                                 ClassifierConfig config);

// score_c = -||feature - mu_c||_2, probabilities = softmax(score / T).
// Deterministic: identical pixels give identical predictions.
CurrencyPrediction classify_currency(const Image& img,
                                     const ClassifierConfig& config);

// Two decimals, round-half-to-even.
std::string format_likelihood(double value);

// The Case-I/II/III report: line 1 is the image path, line 2 the prediction
// sentence. The timing arguments are accepted for signature parity with the
// capture loop but do not appear in the report.
std::string format_prediction(const CurrencyPrediction& p,
                              std::string_view image_path,
                              double elapsed_ms = 0.0, double step_ms = 0.0);

}  // namespace drishti::vision
