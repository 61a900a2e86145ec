#include "rsl/fit.hpp"

#include <algorithm>
#include <cmath>

#include "rsl/error.hpp"

namespace rsl {

ExponentFit fit_exponent(const std::vector<double>& indices, const std::vector<double>& log_norms,
                         double predicted_slope) {
  if (indices.size() != log_norms.size() || indices.size() < 2)
    throw Error(ErrorKind::DomainError, "a fit needs at least two matching points");
  ExponentFit f;
  f.indices = indices;
  f.log_norms = log_norms;
  f.predicted_slope = predicted_slope;
  const double m = static_cast<double>(indices.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    sx += indices[i];
    sy += log_norms[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    sxx += (indices[i] - mx) * (indices[i] - mx);
    sxy += (indices[i] - mx) * (log_norms[i] - my);
  }
  if (sxx == 0.0) throw Error(ErrorKind::DomainError, "fit indices must not all coincide");
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < indices.size(); ++i)
    f.max_residual = std::max(f.max_residual, std::abs(log_norms[i] - (f.slope * indices[i] + f.intercept)));
  return f;
}

ExponentFit fit_log2(const std::vector<double>& indices, const std::vector<double>& values,
                     double predicted_slope) {
  std::vector<double> logs;
  logs.reserve(values.size());
  for (double v : values) {
    if (!(v > 0.0)) throw Error(ErrorKind::DomainError, "cannot fit the logarithm of a non-positive norm");
    logs.push_back(std::log2(v));
  }
  return fit_exponent(indices, logs, predicted_slope);
}

}  // namespace rsl
