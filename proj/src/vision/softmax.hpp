#pragma once

#include <span>
#include <vector>

namespace drishti::vision {

// Temperature-scaled softmax with max-subtraction for overflow safety.
// Outputs are positive and sum to 1.
std::vector<double> softmax(std::span<const double> scores,
                            double temperature = 1.0);

// argmax with first-wins tie break; the index order doubles as the
// class-list tie-break rule everywhere a label is picked.
std::size_t argmax(std::span<const double> values);

}  // namespace drishti::vision
