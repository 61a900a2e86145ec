#include "rsl/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rsl/error.hpp"

namespace rsl {

RegimeExponents regime_exponents(const DispersionSymbol& symbol, int k) {
  RegimeExponents e;
  e.k = k;
  e.m = k >= 0 ? symbol.m1 : symbol.m2;
  e.alpha = k >= 0 ? symbol.alpha1 : symbol.alpha2;
  return e;
}

DispersionSymbol schrodinger_symbol() {
  DispersionSymbol s;
  s.name = "schrodinger";
  s.phi = [](double r) { return r * r; };
  s.dphi = [](double r) { return 2.0 * r; };
  s.d2phi = [](double) { return 2.0; };
  s.m1 = s.m2 = 2.0;
  s.alpha1 = s.alpha2 = 2.0;
  s.power = 2.0;
  return s;
}

DispersionSymbol wave_symbol() {
  DispersionSymbol s;
  s.name = "wave";
  s.phi = [](double r) { return r; };
  s.dphi = [](double) { return 1.0; };
  s.d2phi = [](double) { return 0.0; };
  s.m1 = s.m2 = 1.0;
  s.power = 1.0;
  return s;
}

DispersionSymbol klein_gordon_symbol() {
  DispersionSymbol s;
  s.name = "klein-gordon";
  s.phi = [](double r) { return std::sqrt(1.0 + r * r); };
  s.dphi = [](double r) { return r / std::sqrt(1.0 + r * r); };
  s.d2phi = [](double r) { return std::pow(1.0 + r * r, -1.5); };
  s.m1 = 1.0;
  s.m2 = 2.0;
  s.alpha1 = -1.0;
  s.alpha2 = 2.0;
  return s;
}

DispersionSymbol beam_symbol() {
  DispersionSymbol s;
  s.name = "beam";
  s.phi = [](double r) { return std::sqrt(1.0 + r * r * r * r); };
  s.dphi = [](double r) {
    const double r2 = r * r;
    return 2.0 * r2 * r / std::sqrt(1.0 + r2 * r2);
  };
  s.d2phi = [](double r) {
    const double r2 = r * r;
    const double r4 = r2 * r2;
    return (6.0 * r2 + 2.0 * r4 * r2) / std::pow(1.0 + r4, 1.5);
  };
  s.m1 = 2.0;
  s.m2 = 4.0;
  s.alpha1 = 2.0;
  s.alpha2 = 4.0;
  return s;
}

DispersionSymbol fractional_symbol(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw Error(ErrorKind::UnknownSigma, "fractional order must be positive, got " + std::to_string(sigma));
  DispersionSymbol s;
  char buf[64];
  std::snprintf(buf, sizeof buf, "fractional:%g", sigma);
  s.name = buf;
  s.phi = [sigma](double r) { return std::pow(r, sigma); };
  s.dphi = [sigma](double r) { return sigma * std::pow(r, sigma - 1.0); };
  s.d2phi = [sigma](double r) { return sigma * (sigma - 1.0) * std::pow(r, sigma - 2.0); };
  s.m1 = s.m2 = sigma;
  if (sigma != 1.0) s.alpha1 = s.alpha2 = sigma;
  s.power = sigma;
  return s;
}

DispersionSymbol fourth_order_symbol() {
  DispersionSymbol s;
  s.name = "fourth-order";
  s.phi = [](double r) { return r * r + r * r * r * r; };
  s.dphi = [](double r) { return 2.0 * r + 4.0 * r * r * r; };
  s.d2phi = [](double r) { return 2.0 + 12.0 * r * r; };
  s.m1 = 4.0;
  s.m2 = 2.0;
  s.alpha1 = 4.0;
  s.alpha2 = 2.0;
  return s;
}

DispersionSymbol symbol_by_name(const std::string& name) {
  if (name == "schrodinger") return schrodinger_symbol();
  if (name == "wave") return wave_symbol();
  if (name == "klein-gordon") return klein_gordon_symbol();
  if (name == "beam") return beam_symbol();
  if (name == "fourth-order") return fourth_order_symbol();
  const std::string prefix = "fractional:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string tail = name.substr(prefix.size());
    std::size_t used = 0;
    double sigma = std::numeric_limits<double>::quiet_NaN();
    try {
      sigma = std::stod(tail, &used);
    } catch (...) {
      throw Error(ErrorKind::UnknownSigma, "cannot parse fractional order '" + tail + "'");
    }
    if (used != tail.size()) throw Error(ErrorKind::UnknownSigma, "cannot parse fractional order '" + tail + "'");
    return fractional_symbol(sigma);
  }
  if (name == "fractional") throw Error(ErrorKind::UnknownSigma, "fractional symbol needs an order, e.g. fractional:1.5");
  throw Error(ErrorKind::UnknownSymbol, "unknown dispersion symbol '" + name + "'");
}

std::vector<DispersionSymbol> builtin_symbols(double fractional_sigma) {
  return {schrodinger_symbol(), wave_symbol(),   klein_gordon_symbol(),
          beam_symbol(),        fractional_symbol(fractional_sigma), fourth_order_symbol()};
}

OctaveRatios hypothesis_ratios(const DispersionSymbol& symbol, int k,
                               const std::vector<double>& samples, double window) {
  const RegimeExponents e = regime_exponents(symbol, k);
  OctaveRatios o;
  o.k = k;
  o.slope_min = std::numeric_limits<double>::infinity();
  o.slope_max = 0.0;
  double cmin = std::numeric_limits<double>::infinity(), cmax = 0.0;
  for (double r : samples) {
    if (!(r > 0.0)) throw Error(ErrorKind::NonPositiveSample, "sample r = " + std::to_string(r));
    const double slope = std::abs(symbol.dphi(r)) / std::pow(r, e.m - 1.0);
    o.slope_min = std::min(o.slope_min, slope);
    o.slope_max = std::max(o.slope_max, slope);
    if (e.alpha) {
      const double curv = std::abs(symbol.d2phi(r)) / std::pow(r, *e.alpha - 2.0);
      cmin = std::min(cmin, curv);
      cmax = std::max(cmax, curv);
    }
  }
  auto inside = [window](double lo, double hi) { return lo >= 1.0 / window && hi <= window; };
  o.pass = inside(o.slope_min, o.slope_max);
  if (e.alpha) {
    o.curvature_min = cmin;
    o.curvature_max = cmax;
    o.pass = o.pass && inside(cmin, cmax);
  }
  return o;
}

HypothesisReport verify_hypotheses(const DispersionSymbol& symbol, int k_min, int k_max,
                                   int samples_per_octave, double window) {
  if (samples_per_octave < 4)
    throw Error(ErrorKind::ParameterViolation, "samples_per_octave must be at least 4");
  HypothesisReport rep;
  rep.symbol = symbol.name;
  rep.window = window;
  rep.samples_per_octave = samples_per_octave;
  rep.pass = true;
  for (int k = k_min; k <= k_max; ++k) {
    std::vector<double> samples;
    for (int i = 0; i <= samples_per_octave; ++i)
      samples.push_back(std::ldexp(std::exp2(static_cast<double>(i) / samples_per_octave), k));
    rep.octaves.push_back(hypothesis_ratios(symbol, k, samples, window));
    rep.pass = rep.pass && rep.octaves.back().pass;
  }
  return rep;
}

DerivativeCheck finite_difference_check(const DispersionSymbol& symbol,
                                        const std::vector<double>& samples) {
  DerivativeCheck out;
  for (double r : samples) {
    if (!(r > 0.0)) throw Error(ErrorKind::NonPositiveSample, "sample r = " + std::to_string(r));
    const double h1 = 1e-5 * r, h2 = 1e-4 * r;
    const double d1 = (symbol.phi(r + h1) - symbol.phi(r - h1)) / (2.0 * h1);
    const double d2 = (symbol.phi(r + h2) - 2.0 * symbol.phi(r) + symbol.phi(r - h2)) / (h2 * h2);
    const double a1 = symbol.dphi(r), a2 = symbol.d2phi(r);
    // scale by the local size of phi's derivatives so zero curvature stays meaningful
    const double s1 = std::max(std::abs(a1), std::abs(symbol.phi(r)) / r);
    const double s2 = std::max(std::abs(a2), std::abs(symbol.phi(r)) / (r * r));
    out.max_rel_error_first = std::max(out.max_rel_error_first, std::abs(d1 - a1) / s1);
    out.max_rel_error_second = std::max(out.max_rel_error_second, std::abs(d2 - a2) / s2);
  }
  return out;
}

}  // namespace rsl
