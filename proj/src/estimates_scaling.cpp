#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rsl/error.hpp"
#include "rsl/estimates.hpp"

namespace rsl {

double predicted_exponent(const DispersionSymbol& symbol, int n, double q, int k, BoundForm form) {
  const RegimeExponents e = regime_exponents(symbol, k);
  const double base = 0.5 * n - (n + e.m) / q;
  if (form == BoundForm::dispersive) {
    if (!(q > 2.0 * n / (n - 1.0)))
      throw Error(ErrorKind::OutOfRangeQ, "first bound needs q > 2n/(n-1) = " + std::to_string(2.0 * n / (n - 1.0)));
    return base;
  }
  const double q_end = (4.0 * n + 2.0) / (2.0 * n - 1.0);
  if (q < q_end - 1e-12 || q > 6.0 + 1e-12)
    throw Error(ErrorKind::OutOfRangeQ, "second bound needs (4n+2)/(2n-1) <= q <= 6");
  if (!e.alpha) throw Error(ErrorKind::OutOfRangeQ, "second bound needs a curvature exponent for " + symbol.name);
  return base + (0.25 - 0.5 / q) * (e.m - *e.alpha);
}

SlopeVerdict judge_upper_bound(const ExponentFit& fit, bool pure_power, double tight, double loose) {
  SlopeVerdict v;
  v.within_bound = fit.slope <= fit.predicted_slope + loose;
  v.exact = std::abs(fit.slope - fit.predicted_slope) <= tight;
  v.pass = v.within_bound && (!pure_power || v.exact) && !fit.unreliable();
  return v;
}

RadialProfile flat_band_profile(int n, int k) {
  const double lo = std::ldexp(1.0, k - 1), hi = std::ldexp(1.0, k + 1);
  FrequencyGrid grid = FrequencyGrid::dyadic_panels(lo, hi, 64, 8);
  const double e = -0.5 * (n - 1);
  RadialProfile raw = make_profile(n, grid, [e](double s) { return Complex(std::pow(s, e), 0.0); }, lo, hi, true);
  const double norm = l2_norm(project(raw, k));
  return make_profile(n, std::move(grid), [e, norm](double s) { return Complex(std::pow(s, e) / norm, 0.0); }, lo, hi, true);
}

namespace {

struct BandGeometry {
  double lo, hi, slope_max, slope_min, phase_span, m;
};

BandGeometry band_geometry(const DispersionSymbol& symbol, int k) {
  BandGeometry g;
  g.lo = std::ldexp(1.0, k - 1);
  g.hi = std::ldexp(1.0, k + 1);
  g.slope_max = 0.0;
  g.slope_min = HUGE_VAL;
  for (int i = 0; i <= 512; ++i) {
    const double s = g.lo + (g.hi - g.lo) * i / 512.0;
    const double d = std::abs(symbol.dphi(s));
    g.slope_max = std::max(g.slope_max, d);
    g.slope_min = std::min(g.slope_min, d);
  }
  g.phase_span = std::abs(symbol.phi(g.hi) - symbol.phi(g.lo));
  g.m = regime_exponents(symbol, k).m;
  return g;
}

double time_scale(const BandGeometry& g, int k) { return std::exp2(-k * g.m); }

}  // namespace

SlabGenerator band_slab(const DispersionSymbol& symbol, const RadialProfile& profile, int k,
                        const NormPolicy& policy) {
  const BandGeometry geo = band_geometry(symbol, k);
  const double t_panel = policy.t_panel_factor * std::numbers::pi / geo.phase_span;
  const double r_panel = policy.r_panel_factor * std::numbers::pi / (2.0 * geo.hi);
  const RadialProfile band = project(profile, k);
  return [=](double t_lo, double t_hi) {
    const NodeSet t = symmetric_time_nodes(t_lo, t_hi, t_panel, policy.order);
    const double r_max = t_hi * geo.slope_max + policy.R0 * std::ldexp(1.0, -k);
    const NodeSet r = radial_nodes(0.0, r_max, r_panel, policy.order);
    const PhysicalGrid grid = make_physical_grid(t, -t_hi, t_hi, r, 0.0, r_max);
    return evolve(symbol, band, grid, policy.quadrature);
  };
}

FrequencyScalingResult fit_frequency_scaling(const DispersionSymbol& symbol, int n, double q,
                                             const std::vector<int>& ks, const NormPolicy& policy) {
  if (ks.size() < 2) throw Error(ErrorKind::DomainError, "need at least two frequency scales");
  FrequencyScalingResult res;
  res.form = q > 2.0 * n / (n - 1.0) ? BoundForm::dispersive : BoundForm::curvature;
  std::vector<double> idx;
  for (int k : ks) {
    const BandGeometry geo = band_geometry(symbol, k);
    const RadialProfile profile = flat_band_profile(n, k);
    const SlabGenerator slab = band_slab(symbol, profile, k, policy);
    MixedNormSpec spec;
    spec.q = spec.r = q;
    const double T0 = policy.T0 * time_scale(geo, k);
    if (policy.adaptive) {
      const WindowResult w = adaptive_window(slab, spec, T0, policy.tol, policy.max_doublings, policy.extrapolate_tail);
      if (!w.converged)
        throw Error(ErrorKind::NonConvergent, "time window did not saturate at k = " + std::to_string(k) +
                                                  " (T = " + std::to_string(w.T) + ")");
      res.norms.push_back(w.norm);
      res.windows.push_back(w.T);
      res.converged.push_back(true);
    } else {
      res.norms.push_back(mixed_norm(slab(0.0, T0), spec));
      res.windows.push_back(T0);
      res.converged.push_back(false);
    }
    idx.push_back(k);
  }
  const double predicted = predicted_exponent(symbol, n, q, ks.back(), res.form);
  res.fit = fit_log2(idx, res.norms, predicted);
  res.verdict = judge_upper_bound(res.fit, symbol.power.has_value());
  return res;
}

SliceL2Report slice_l2_check(const DispersionSymbol& symbol, int n, int k,
                             const std::vector<double>& fractions, const NormPolicy& policy) {
  if (fractions.empty()) throw Error(ErrorKind::DomainError, "no time slices requested");
  const BandGeometry geo = band_geometry(symbol, k);
  const RadialProfile band = project(flat_band_profile(n, k), k);
  SliceL2Report rep;
  rep.symbol = symbol.name;
  rep.n = n;
  rep.k = k;
  rep.data_norm = l2_norm(band);
  double t_max = 0.0;
  NodeSet t;
  for (double c : fractions) {
    t.x.push_back(c * policy.T0 * time_scale(geo, k));
    t.w.push_back(1.0);
    t_max = std::max(t_max, std::abs(t.x.back()));
  }
  const double r_max = t_max * geo.slope_max + policy.R0 * std::ldexp(1.0, -k);
  const NodeSet r = radial_nodes(0.0, r_max, policy.r_panel_factor * std::numbers::pi / (2.0 * geo.hi), policy.order);
  const SpaceTimeField f = evolve(symbol, band, make_physical_grid(t, -t_max, t_max, r, 0.0, r_max), policy.quadrature);
  const double area = sphere_area(n);
  for (std::size_t i = 0; i < f.grid.nt(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < f.grid.nr(); ++j)
      acc += std::norm(f.at(i, j)) * std::pow(f.grid.r[j], n - 1) * f.grid.r_weights[j];
    const double l2 = std::sqrt(area * acc);
    rep.times.push_back(f.grid.t[i]);
    rep.slice_norms.push_back(l2);
    rep.max_deviation = std::max(rep.max_deviation, std::abs(l2 - rep.data_norm) / rep.data_norm);
  }
  return rep;
}

double annulus_predicted_slope(AnnulusRegime regime, int n, double q) {
  switch (regime) {
    case AnnulusRegime::inner: return n / q;
    case AnnulusRegime::outer_dispersive: return n / q - 0.5 * (n - 1);
    case AnnulusRegime::outer_curvature: return (2.0 * n + 1.0) / (2.0 * q) - (2.0 * n - 1.0) / 4.0;
  }
  return 0.0;
}

AnnulusScalingResult fit_annulus_scaling(const DispersionSymbol& symbol, int n,
                                         const std::vector<double>& qs, int k,
                                         const std::vector<int>& js, AnnulusRegime regime,
                                         const NormPolicy& policy) {
  if (js.size() < 2 || qs.empty()) throw Error(ErrorKind::DomainError, "need at least two annuli and one exponent");
  for (int j : js) {
    const bool inner_ok = j + k <= 1;
    if (regime == AnnulusRegime::inner ? !inner_ok : inner_ok)
      throw Error(ErrorKind::RegimeViolation, "annulus j = " + std::to_string(j) + " with k = " + std::to_string(k) +
                                                  (regime == AnnulusRegime::inner ? " needs j + k <= 1" : " needs j + k >= 2"));
  }
  AnnulusScalingResult res;
  res.regime = regime;
  res.qs = qs;
  res.js = js;
  res.norms.assign(qs.size(), {});
  const BandGeometry geo = band_geometry(symbol, k);
  const RadialProfile band = project(flat_band_profile(n, k), k);
  const double t_panel = policy.t_panel_factor * std::numbers::pi / geo.phase_span;
  const double r_panel = policy.r_panel_factor * std::numbers::pi / (2.0 * geo.hi);
  for (int j : js) {
    const double a = std::ldexp(1.0, j - 1), b = std::ldexp(1.0, j);
    const NodeSet r = radial_nodes(a, b, r_panel, policy.order);
    auto slab = [&](double t_lo, double t_hi) {
      const NodeSet t = symmetric_time_nodes(t_lo, t_hi, t_panel, policy.order);
      return evolve(symbol, band, make_physical_grid(t, -t_hi, t_hi, r, a, b), policy.quadrature);
    };
    // start once the slowest part of the band has crossed the annulus
    double T = std::max(policy.T0 * time_scale(geo, k), regime == AnnulusRegime::inner ? 0.0 : 2.0 * b / geo.slope_min);
    std::vector<double> power(qs.size(), 0.0);
    MixedNormSpec spec;
    spec.region = RadialRegion::shell(j);
    auto accumulate = [&](const SpaceTimeField& f) {
      for (std::size_t iq = 0; iq < qs.size(); ++iq) {
        spec.q = spec.r = qs[iq];
        power[iq] += mixed_norm_power(f, spec);
      }
    };
    accumulate(slab(0.0, T));
    if (policy.adaptive) {
      bool done = false;
      for (int d = 0; d < policy.max_doublings && !done; ++d) {
        const std::vector<double> before = power;
        accumulate(slab(T, 2.0 * T));
        T *= 2.0;
        done = true;
        for (std::size_t iq = 0; iq < qs.size(); ++iq) {
          const double now = std::pow(power[iq], 1.0 / qs[iq]), prev = std::pow(before[iq], 1.0 / qs[iq]);
          if (now - prev > policy.tol * now) done = false;
        }
      }
      if (!done) throw Error(ErrorKind::NonConvergent, "annulus " + std::to_string(j) + " window did not saturate");
    }
    res.windows.push_back(T);
    for (std::size_t iq = 0; iq < qs.size(); ++iq) res.norms[iq].push_back(std::pow(power[iq], 1.0 / qs[iq]));
  }
  std::vector<double> idx(js.begin(), js.end());
  for (std::size_t iq = 0; iq < qs.size(); ++iq) {
    res.fits.push_back(fit_log2(idx, res.norms[iq], annulus_predicted_slope(regime, n, qs[iq])));
    res.pass.push_back(res.fits.back().slope <= res.fits.back().predicted_slope + 0.1);
  }
  return res;
}

GrowthReport conjecture_probe(const DispersionSymbol& symbol, int n, const std::vector<double>& Rs,
                              const NormPolicy& policy) {
  if (n < 2 || Rs.empty()) throw Error(ErrorKind::DomainError, "probe needs n >= 2 and radii");
  const double rx = (4.0 * n - 2.0) / (2.0 * n - 3.0);
  const int k = 0;
  const BandGeometry geo = band_geometry(symbol, k);
  const RadialProfile band = project(flat_band_profile(n, k), k);
  const double R_max = *std::max_element(Rs.begin(), Rs.end());
  const NodeSet r = radial_nodes(2.0, R_max, policy.r_panel_factor * std::numbers::pi / (2.0 * geo.hi), policy.order);
  const double t_panel = policy.t_panel_factor * std::numbers::pi / geo.phase_span;
  const double omega = sphere_area(n);
  std::vector<double> power(Rs.size(), 0.0);
  auto accumulate = [&](double t_lo, double t_hi) {
    const NodeSet t = symmetric_time_nodes(t_lo, t_hi, t_panel, policy.order);
    const SpaceTimeField f = evolve(symbol, band, make_physical_grid(t, -t_hi, t_hi, r, 2.0, R_max), policy.quadrature);
    for (std::size_t ir = 0; ir < Rs.size(); ++ir) {
      for (std::size_t i = 0; i < f.grid.nt(); ++i) {
        double inner = 0.0;
        for (std::size_t jj = 0; jj < f.grid.nr(); ++jj)
          if (f.grid.r[jj] <= Rs[ir])
            inner += std::pow(std::abs(f.at(i, jj)), rx) * omega * std::pow(f.grid.r[jj], n - 1) * f.grid.r_weights[jj];
        power[ir] += std::pow(inner, 2.0 / rx) * f.grid.t_weights[i];
      }
    }
  };
  double T = std::max(policy.T0, 2.0 * R_max / geo.slope_min);
  accumulate(0.0, T);
  for (int d = 0; d < policy.max_doublings; ++d) {
    const double before = power.back();
    accumulate(T, 2.0 * T);
    T *= 2.0;
    if (std::sqrt(power.back()) - std::sqrt(before) <= policy.tol * std::sqrt(power.back())) break;
  }
  GrowthReport g;
  g.x = Rs;
  std::vector<double> logs;
  for (std::size_t i = 0; i < Rs.size(); ++i) {
    g.values.push_back(std::sqrt(power[i]));
    logs.push_back(std::log2(std::log2(Rs[i])));
    if (i > 0) g.increments.push_back(g.values[i] / g.values[i - 1] - 1.0);
  }
  g.monotone = std::all_of(g.increments.begin(), g.increments.end(), [](double v) { return v > 0.0; });
  if (Rs.size() >= 2) g.fit = fit_log2(logs, g.values, 0.0);
  g.pass = true;  // experiment only
  return g;
}

}  // namespace rsl
