#include "vision/softmax.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace drishti::vision {

std::vector<double> softmax(std::span<const double> scores,
                            double temperature) {
  if (scores.empty())
    throw InvalidArgumentError("softmax: empty score vector");
  if (!(temperature > 0))
    throw InvalidArgumentError("softmax: temperature must be positive");

  const double mx = *std::max_element(scores.begin(), scores.end());
  std::vector<double> out(scores.size());
  double sum = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    out[i] = std::exp((scores[i] - mx) / temperature);
    sum += out[i];
  }
  for (auto& v : out) v /= sum;
  return out;
}

std::size_t argmax(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace drishti::vision
