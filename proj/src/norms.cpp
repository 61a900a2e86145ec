#include "rsl/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rsl/error.hpp"

namespace rsl {

bool RadialRegion::contains(double r) const {
  switch (kind) {
    case Kind::all: return true;
    case Kind::annulus: return r >= std::ldexp(1.0, j - 1) && r < std::ldexp(1.0, j);
    case Kind::tail: return r >= R;
  }
  return false;
}

void MixedNormSpec::validate() const {
  if (!(q >= 1.0) || !(r >= 1.0)) throw Error(ErrorKind::DomainError, "exponents must be at least 1");
  if (time_window && !(time_window->second >= time_window->first))
    throw Error(ErrorKind::DomainError, "empty time window");
}

namespace {

void check_coverage(const SpaceTimeField& field, const MixedNormSpec& spec) {
  const PhysicalGrid& g = field.grid;
  const double slack = 1e-12;
  if (spec.time_window) {
    const auto [a, b] = *spec.time_window;
    if (a < g.t_lo - slack * std::abs(g.t_lo) - slack || b > g.t_hi + slack * std::abs(g.t_hi) + slack)
      throw Error(ErrorKind::DomainNotCovered, "time window [" + std::to_string(a) + ", " + std::to_string(b) +
                                                   "] exceeds the grid [" + std::to_string(g.t_lo) + ", " +
                                                   std::to_string(g.t_hi) + "]");
  }
  if (spec.region.kind == RadialRegion::Kind::annulus) {
    const double lo = std::ldexp(1.0, spec.region.j - 1), hi = std::ldexp(1.0, spec.region.j);
    if (g.r_lo > lo * (1 + slack) || g.r_hi < hi * (1 - slack))
      throw Error(ErrorKind::DomainNotCovered, "annulus " + std::to_string(spec.region.j) + " not covered by the grid");
  }
  if (spec.region.kind == RadialRegion::Kind::tail && g.r_lo > spec.region.R * (1 + slack))
    throw Error(ErrorKind::DomainNotCovered, "tail region starts below the grid");
}

bool in_window(const MixedNormSpec& spec, double t) {
  return !spec.time_window || (t >= spec.time_window->first && t <= spec.time_window->second);
}

// Per-time inner norms (to the power r for finite r, sup for r = inf).
std::vector<double> inner_values(const SpaceTimeField& field, const MixedNormSpec& spec) {
  const PhysicalGrid& g = field.grid;
  const double omega = sphere_area(field.n);
  std::vector<double> mask(g.nr());
  for (std::size_t j = 0; j < g.nr(); ++j)
    mask[j] = spec.region.contains(g.r[j]) ? omega * std::pow(g.r[j], field.n - 1) * g.r_weights[j] : 0.0;
  std::vector<double> out(g.nt(), 0.0);
  for (std::size_t i = 0; i < g.nt(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < g.nr(); ++j) {
      if (mask[j] == 0.0) continue;
      const double a = std::abs(field.at(i, j));
      if (std::isinf(spec.r))
        acc = std::max(acc, a);
      else if (spec.r == 2.0)
        acc += a * a * mask[j];
      else
        acc += std::pow(a, spec.r) * mask[j];
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace

double mixed_norm_power(const SpaceTimeField& field, const MixedNormSpec& spec) {
  spec.validate();
  if (std::isinf(spec.q)) throw Error(ErrorKind::DomainError, "q-th power needs finite q");
  check_coverage(field, spec);
  const std::vector<double> inner = inner_values(field, spec);
  double total = 0.0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (!in_window(spec, field.grid.t[i])) continue;
    const double lr = std::isinf(spec.r) ? inner[i] : std::pow(inner[i], 1.0 / spec.r);
    total += std::pow(lr, spec.q) * field.grid.t_weights[i];
  }
  return total;
}

double mixed_norm(const SpaceTimeField& field, const MixedNormSpec& spec) {
  spec.validate();
  if (!std::isinf(spec.q)) return std::pow(mixed_norm_power(field, spec), 1.0 / spec.q);
  check_coverage(field, spec);
  const std::vector<double> inner = inner_values(field, spec);
  double sup = 0.0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (!in_window(spec, field.grid.t[i])) continue;
    sup = std::max(sup, std::isinf(spec.r) ? inner[i] : std::pow(inner[i], 1.0 / spec.r));
  }
  return sup;
}

double sobolev_norm(const RadialProfile& profile, double sigma) {
  double sum = 0.0;
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    const double s = profile.grid.nodes[i];
    if (s < profile.support_lo || s > profile.support_hi || s <= 0.0) continue;
    sum += std::norm(profile.values[i]) * std::pow(s, 2.0 * sigma + profile.n - 1) * profile.grid.weights[i];
  }
  return std::sqrt(sphere_area(profile.n) * sum);
}

WindowResult adaptive_window(const SlabGenerator& slab, const MixedNormSpec& spec, double T0,
                             double tol, int max_doublings, bool extrapolate, double max_ratio) {
  spec.validate();
  if (std::isinf(spec.q)) throw Error(ErrorKind::DomainError, "adaptive window needs finite q");
  if (!(T0 > 0.0)) throw Error(ErrorKind::DomainError, "initial window must be positive");
  MixedNormSpec slab_spec = spec;
  slab_spec.time_window.reset();
  WindowResult res;
  double power = mixed_norm_power(slab(0.0, T0), slab_spec);
  res.T = T0;
  res.norm = res.measured = std::pow(power, 1.0 / spec.q);
  res.windows.push_back(res.T);
  res.norms.push_back(res.norm);
  if (power == 0.0) {
    res.converged = true;
    return res;
  }
  double last_slab = -1.0;
  for (int d = 0; d < max_doublings; ++d) {
    const double piece = mixed_norm_power(slab(res.T, 2.0 * res.T), slab_spec);
    power += piece;
    const double previous = res.norm;
    res.T *= 2.0;
    res.measured = std::pow(power, 1.0 / spec.q);
    bool ratio_ok = true;
    if (extrapolate) {
      const double ratio = last_slab > 0.0 ? piece / last_slab : 1.0;
      ratio_ok = ratio < max_ratio;
      res.tail = ratio_ok ? piece * ratio / (1.0 - ratio) : 0.0;
    }
    last_slab = piece;
    res.norm = std::pow(power + res.tail, 1.0 / spec.q);
    res.windows.push_back(res.T);
    res.norms.push_back(res.norm);
    if (ratio_ok && std::abs(res.norm - previous) <= tol * res.norm) {
      res.converged = true;
      return res;
    }
  }
  return res;
}

}  // namespace rsl
