#include "rsl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace rsl {

namespace {

GaussRule build_rule(int order) {
  GaussRule rule;
  rule.x.resize(order);
  rule.w.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      dp = order * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    double p0 = 1.0, p1 = 0.0;
    for (int j = 0; j < order; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
    }
    dp = order * (z * p0 - p1) / (z * z - 1.0);
    rule.x[i] = -z;
    rule.x[order - 1 - i] = z;
    rule.w[i] = rule.w[order - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 1 || order > 256) throw std::invalid_argument("gauss_legendre: order out of range");
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

void append_panels(NodeSet& out, double a, double b, int panels, int order) {
  const GaussRule& g = gauss_legendre(order);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (int i = 0; i < order; ++i) {
      out.x.push_back(mid + 0.5 * h * g.x[i]);
      out.w.push_back(0.5 * h * g.w[i]);
    }
  }
}

NodeSet composite_gauss(double a, double b, int panels, int order) {
  NodeSet out;
  out.x.reserve(static_cast<std::size_t>(panels) * order);
  out.w.reserve(static_cast<std::size_t>(panels) * order);
  append_panels(out, a, b, panels, order);
  return out;
}

NodeSet composite_gauss_with_breaks(double a, double b, double max_len, int order,
                                    const std::vector<double>& breaks) {
  std::vector<double> edges{a};
  for (double e : breaks)
    if (e > a && e < b) edges.push_back(e);
  edges.push_back(b);
  NodeSet out;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double len = edges[i + 1] - edges[i];
    const int panels = std::max(1, static_cast<int>(std::ceil(len / max_len - 1e-12)));
    append_panels(out, edges[i], edges[i + 1], panels, order);
  }
  return out;
}

double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        bool singular_left, bool singular_right, int levels, int order) {
  if (!(b > a)) return 0.0;
  const GaussRule& g = gauss_legendre(order);
  auto panel = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < order; ++i) s += g.w[i] * f(mid + h * g.x[i]);
    return s * h;
  };
  // geometric refinement with ratio 0.15 toward singular endpoints
  constexpr double ratio = 0.15;
  if (singular_left && singular_right) {
    const double mid = 0.5 * (a + b);
    return integrate_graded(f, a, mid, true, false, levels, order) +
           integrate_graded(f, mid, b, false, true, levels, order);
  }
  double total = 0.0;
  // stop grading before Gauss nodes would round onto the singular endpoint
  auto floor_width = [](double endpoint) { return 1024.0 * std::numeric_limits<double>::epsilon() * std::abs(endpoint); };
  if (singular_left) {
    double hi = b;
    for (int l = 0; l < levels && hi - a > floor_width(a); ++l) {
      const double lo = a + (hi - a) * ratio;
      total += panel(lo, hi);
      hi = lo;
    }
    return total + panel(a, hi);
  }
  if (singular_right) {
    double lo = a;
    for (int l = 0; l < levels && b - lo > floor_width(b); ++l) {
      const double hi = b - (b - lo) * ratio;
      total += panel(lo, hi);
      lo = hi;
    }
    return total + panel(lo, b);
  }
  return panel(a, b);
}

}  // namespace rsl
