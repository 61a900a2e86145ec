#pragma once

#include <vector>

namespace rsl {

// Least-squares line through (index, log2 norm) with the predicted slope
// attached for comparison.
struct ExponentFit {
  std::vector<double> indices;
  std::vector<double> log_norms;
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  double predicted_slope = 0.0;

  bool unreliable() const { return max_residual > 0.2; }
};

ExponentFit fit_exponent(const std::vector<double>& indices, const std::vector<double>& log_norms,
                         double predicted_slope);

// Convenience: fit log2 of positive values.
ExponentFit fit_log2(const std::vector<double>& indices, const std::vector<double>& values,
                     double predicted_slope);

}  // namespace rsl
