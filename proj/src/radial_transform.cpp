#include "rsl/radial_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rsl/error.hpp"
#include "rsl/special_functions.hpp"

namespace rsl {

void QuadraturePolicy::validate() const {
  if (!(max_phase_step > 0.0) || max_phase_step > std::numbers::pi / 4.0 + 1e-15)
    throw Error(ErrorKind::ConfigError, "max_phase_step must lie in (0, pi/4]");
  if (panel_order < 1 || panel_order > 64) throw Error(ErrorKind::ConfigError, "panel_order must lie in [1, 64]");
  if (refinement_limit < 1) throw Error(ErrorKind::ConfigError, "refinement_limit must be positive");
  if (base_panels_per_octave < 1) throw Error(ErrorKind::ConfigError, "base_panels_per_octave must be positive");
}

FrequencyGrid FrequencyGrid::gauss_panels(double lo, double hi, int panels, int order) {
  if (!(hi > lo) || panels < 1) throw Error(ErrorKind::DomainError, "empty frequency grid");
  FrequencyGrid g;
  g.order = order;
  NodeSet ns = composite_gauss(lo, hi, panels, order);
  g.nodes = std::move(ns.x);
  g.weights = std::move(ns.w);
  for (int p = 0; p <= panels; ++p) g.panel_edges.push_back(lo + (hi - lo) * p / panels);
  g.panel_edges.back() = hi;
  return g;
}

FrequencyGrid FrequencyGrid::dyadic_panels(double lo, double hi, int panels_per_octave, int order) {
  if (!(hi > lo) || !(lo >= 0.0)) throw Error(ErrorKind::DomainError, "empty frequency grid");
  FrequencyGrid g;
  g.order = order;
  std::vector<double> edges{lo};
  const double floor_width = hi * std::ldexp(1.0, -12) / panels_per_octave;
  double a = lo;
  while (a < hi) {
    const double octave = a > 0.0 ? std::exp2(std::floor(std::log2(a) + 1e-12)) : 0.0;
    const double width = std::max(octave / panels_per_octave, floor_width);
    double next_break = a > 0.0 ? 2.0 * octave : hi;
    double b = std::min({a + width, next_break, hi});
    if (hi - b < 1e-12 * hi) b = hi;
    edges.push_back(b);
    a = b;
  }
  g.panel_edges = edges;
  const GaussRule& rule = gauss_legendre(order);
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double c = 0.5 * (edges[p] + edges[p + 1]), h = 0.5 * (edges[p + 1] - edges[p]);
    for (int i = 0; i < order; ++i) {
      g.nodes.push_back(c + h * rule.x[i]);
      g.weights.push_back(h * rule.w[i]);
    }
  }
  return g;
}

double FrequencyGrid::lo() const { return panel_edges.empty() ? nodes.front() : panel_edges.front(); }
double FrequencyGrid::hi() const { return panel_edges.empty() ? nodes.back() : panel_edges.back(); }

void FrequencyGrid::validate() const {
  if (nodes.empty() || nodes.size() != weights.size())
    throw Error(ErrorKind::DomainError, "frequency grid needs matching nodes and weights");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!(weights[i] > 0.0)) throw Error(ErrorKind::DomainError, "frequency weights must be positive");
    if (i > 0 && !(nodes[i] > nodes[i - 1])) throw Error(ErrorKind::DomainError, "frequency nodes must increase");
  }
  if (!panel_edges.empty() && nodes.size() != (panel_edges.size() - 1) * static_cast<std::size_t>(order))
    throw Error(ErrorKind::DomainError, "panel structure does not match node count");
}

Complex RadialProfile::value_at(double s) const {
  if (s < support_lo || s > support_hi) return {};
  if (sampler) return sampler(s);
  const auto& x = grid.nodes;
  if (!grid.panel_edges.empty()) {
    const auto& e = grid.panel_edges;
    if (s < e.front() || s > e.back()) return {};
    std::size_t p = static_cast<std::size_t>(std::upper_bound(e.begin(), e.end(), s) - e.begin());
    p = std::clamp<std::size_t>(p, 1, e.size() - 1) - 1;
    const std::size_t base = p * grid.order;
    // barycentric Lagrange on the panel's nodes
    Complex num{};
    double den = 0.0;
    for (int i = 0; i < grid.order; ++i) {
      const double xi = x[base + i];
      if (s == xi) return values[base + i];
      double wi = 1.0;
      for (int j = 0; j < grid.order; ++j)
        if (j != i) wi /= (xi - x[base + j]);
      const double c = wi / (s - xi);
      num += c * values[base + i];
      den += c;
    }
    return num / den;
  }
  if (s <= x.front()) return s == x.front() ? values.front() : Complex{};
  if (s >= x.back()) return s == x.back() ? values.back() : Complex{};
  const std::size_t i = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), s) - x.begin());
  const double f = (s - x[i - 1]) / (x[i] - x[i - 1]);
  return (1.0 - f) * values[i - 1] + f * values[i];
}

bool RadialProfile::is_real() const { return real; }

void RadialProfile::validate() const {
  if (n < 2) throw Error(ErrorKind::DomainError, "profile dimension must be at least 2");
  grid.validate();
  if (values.size() != grid.nodes.size()) throw Error(ErrorKind::DomainError, "profile values do not match grid");
  for (const auto& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw Error(ErrorKind::DomainError, "profile values must be finite");
}

RadialProfile make_profile(int n, FrequencyGrid grid, ProfileSampler h, double support_lo,
                           double support_hi, bool real) {
  RadialProfile p;
  p.real = real;
  p.n = n;
  p.grid = std::move(grid);
  p.support_lo = support_lo;
  p.support_hi = support_hi;
  p.sampler = std::move(h);
  p.values.reserve(p.grid.nodes.size());
  for (double s : p.grid.nodes) p.values.push_back(p.value_at(s));
  p.validate();
  return p;
}

RadialProfile make_profile(int n, FrequencyGrid grid, std::vector<Complex> values) {
  RadialProfile p;
  p.n = n;
  p.grid = std::move(grid);
  p.values = std::move(values);
  p.support_lo = p.grid.lo();
  p.support_hi = p.grid.hi();
  p.real = std::all_of(p.values.begin(), p.values.end(), [](const Complex& v) { return v.imag() == 0.0; });
  p.validate();
  return p;
}

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x), b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

double bump(double x) {
  const double ax = std::abs(x);
  if (ax <= 1.0) return 1.0;
  if (ax >= 2.0) return 0.0;
  return 1.0 - smooth_step(ax - 1.0);
}

double dyadic_cutoff(int k, double s) {
  const double x = std::ldexp(s, -k);
  return bump(x) - bump(2.0 * x);
}

RadialProfile project(const RadialProfile& profile, int k) {
  RadialProfile out = profile;
  out.support_lo = std::max(profile.support_lo, std::ldexp(1.0, k - 1));
  out.support_hi = std::min(profile.support_hi, std::ldexp(1.0, k + 1));
  if (out.support_hi < out.support_lo) out.support_hi = out.support_lo;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const double s = out.grid.nodes[i];
    out.values[i] = (s < out.support_lo || s > out.support_hi) ? Complex{} : profile.values[i] * dyadic_cutoff(k, s);
  }
  // the projected profile is defined exactly through the parent, including
  // when the parent itself is only an interpolant
  out.sampler = [parent = profile, k](double s) { return parent.value_at(s) * dyadic_cutoff(k, s); };
  return out;
}

double sphere_area(int n) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

double l2_norm(const RadialProfile& profile) {
  double sum = 0.0;
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    const double s = profile.grid.nodes[i];
    if (s < profile.support_lo || s > profile.support_hi) continue;
    sum += std::norm(profile.values[i]) * std::pow(s, profile.n - 1) * profile.grid.weights[i];
  }
  return std::sqrt(sphere_area(profile.n) * sum);
}

NodeSet oscillatory_nodes(double lo, double hi, double rate, const QuadraturePolicy& policy) {
  NodeSet out;
  if (!(hi > lo)) return out;
  const double floor_width = hi * std::ldexp(1.0, -12) / policy.base_panels_per_octave;
  double a = lo;
  while (a < hi) {
    const double octave = a > 0.0 ? std::exp2(std::floor(std::log2(a) + 1e-12)) : 0.0;
    const double width = std::max(octave / policy.base_panels_per_octave, floor_width);
    const double next_break = a > 0.0 ? 2.0 * octave : hi;
    double b = std::min({a + width, next_break, hi});
    if (hi - b < 1e-12 * hi) b = hi;
    const double m_real = std::ceil((b - a) * rate / policy.max_phase_step);
    if (m_real > policy.refinement_limit)
      throw Error(ErrorKind::QuadratureUnderresolved,
                  "panel [" + std::to_string(a) + ", " + std::to_string(b) + "] needs " +
                      std::to_string(m_real) + " subpanels, limit " + std::to_string(policy.refinement_limit));
    append_panels(out, a, b, std::max(1, static_cast<int>(m_real)), policy.panel_order);
    a = b;
  }
  return out;
}

NodeSet oscillatory_nodes(const RadialProfile& profile, double rate, const QuadraturePolicy& policy) {
  return oscillatory_nodes(profile.support_lo, profile.support_hi, rate, policy);
}

Complex fourier_bessel(const RadialProfile& profile, double r, const QuadraturePolicy& policy) {
  policy.validate();
  if (!(r >= 0.0)) throw Error(ErrorKind::DomainError, "radius must be nonnegative");
  const NodeSet nodes = oscillatory_nodes(profile, r, policy);
  Complex sum{};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double s = nodes.x[i];
    sum += profile.value_at(s) * (std::pow(s, profile.n - 1) * radial_kernel(profile.n, s * r) * nodes.w[i]);
  }
  return sum;
}

Complex inverse_fourier_bessel(int n, const NodeSet& r_nodes, const std::vector<Complex>& values,
                               double s) {
  if (values.size() != r_nodes.size()) throw Error(ErrorKind::DomainError, "sample count mismatch");
  Complex sum{};
  for (std::size_t i = 0; i < r_nodes.size(); ++i) {
    const double r = r_nodes.x[i];
    sum += values[i] * (std::pow(r, n - 1) * radial_kernel(n, s * r) * r_nodes.w[i]);
  }
  return sum;
}

int annulus_of(double r) {
  if (!(r > 0.0)) return std::numeric_limits<int>::min();
  int e = 0;
  std::frexp(r, &e);  // r = m 2^e with m in [1/2, 1), so 2^{e-1} <= r < 2^e
  return e;
}

PhysicalGrid make_physical_grid(const NodeSet& t, double t_lo, double t_hi, const NodeSet& r,
                                double r_lo, double r_hi) {
  PhysicalGrid g;
  g.t = t.x;
  g.t_weights = t.w;
  g.r = r.x;
  g.r_weights = r.w;
  g.t_lo = t_lo;
  g.t_hi = t_hi;
  g.r_lo = r_lo;
  g.r_hi = r_hi;
  g.annulus.reserve(r.size());
  for (double x : r.x) g.annulus.push_back(annulus_of(x));
  return g;
}

NodeSet radial_nodes(double lo, double hi, double max_panel, int order) {
  std::vector<double> breaks;
  if (hi > 0.0) {
    for (int j = annulus_of(std::max(lo, std::ldexp(hi, -12))); std::ldexp(1.0, j) < hi; ++j)
      if (std::ldexp(1.0, j) > lo) breaks.push_back(std::ldexp(1.0, j));
  }
  return composite_gauss_with_breaks(lo, hi, max_panel, order, breaks);
}

NodeSet time_nodes(double lo, double hi, double max_panel, int order) {
  return composite_gauss_with_breaks(lo, hi, max_panel, order, {});
}

NodeSet symmetric_time_nodes(double lo, double hi, double max_panel, int order) {
  NodeSet pos = lo > 0.0 ? time_nodes(lo, hi, max_panel, order) : time_nodes(0.0, hi, max_panel, order);
  NodeSet out;
  for (std::size_t i = pos.size(); i-- > 0;) {
    out.x.push_back(-pos.x[i]);
    out.w.push_back(pos.w[i]);
  }
  out.x.insert(out.x.end(), pos.x.begin(), pos.x.end());
  out.w.insert(out.w.end(), pos.w.begin(), pos.w.end());
  return out;
}

}  // namespace rsl
