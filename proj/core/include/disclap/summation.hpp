#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace disclap {

/// Cascade (pairwise) summation. Error grows like O(log n) instead of O(n),
/// and the evaluation order is fixed by the data layout, so results do not
/// depend on how the values were produced (thread count, scheduling, ...).
double pairwise_sum(std::span<const double> values);

/// Running compensated (Neumaier) accumulator for long streamed sums.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace disclap
