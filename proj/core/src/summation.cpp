#include "disclap/summation.hpp"

namespace disclap {

namespace {
constexpr std::size_t kLeafSize = 16;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= kLeafSize) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace disclap
