#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rsl {

// A dispersion relation phi on (0, inf) with analytic first and second
// derivatives and the growth / curvature exponents of its two regimes
// (index 1: high frequency k >= 0, index 2: low frequency k < 0).
// Curvature exponents are absent for symbols with vanishing curvature.
struct DispersionSymbol {
  std::string name;
  std::function<double(double)> phi;
  std::function<double(double)> dphi;
  std::function<double(double)> d2phi;
  double m1 = 0.0;
  double m2 = 0.0;
  std::optional<double> alpha1;
  std::optional<double> alpha2;
  // Set for pure powers r^a; enables the exact scaling identity.
  std::optional<double> power;
};

struct RegimeExponents {
  double m = 0.0;
  std::optional<double> alpha;
  int k = 0;
};

RegimeExponents regime_exponents(const DispersionSymbol& symbol, int k);

DispersionSymbol schrodinger_symbol();
DispersionSymbol wave_symbol();
DispersionSymbol klein_gordon_symbol();
DispersionSymbol beam_symbol();
DispersionSymbol fractional_symbol(double sigma);
DispersionSymbol fourth_order_symbol();

// Catalog lookup: "schrodinger", "wave", "klein-gordon", "beam",
// "fractional:<sigma>", "fourth-order".
DispersionSymbol symbol_by_name(const std::string& name);

// One representative of every catalog entry (fractional at sigma = 1.5).
std::vector<DispersionSymbol> builtin_symbols(double fractional_sigma = 1.5);

struct OctaveRatios {
  int k = 0;
  double slope_min = 0.0;  // min of |phi'(r)| / r^(m(k)-1)
  double slope_max = 0.0;
  std::optional<double> curvature_min;  // min of |phi''(r)| / r^(alpha(k)-2)
  std::optional<double> curvature_max;
  bool pass = false;
};

struct HypothesisReport {
  std::string symbol;
  double window = 10.0;
  int samples_per_octave = 0;
  std::vector<OctaveRatios> octaves;
  bool pass = false;
};

// Samples each octave [2^k, 2^(k+1)] log-uniformly (endpoints included) and
// checks the derivative ratios against the window [1/C, C].
HypothesisReport verify_hypotheses(const DispersionSymbol& symbol, int k_min, int k_max,
                                   int samples_per_octave, double window = 10.0);

// Same check on an explicit sample set; throws NonPositiveSample on r <= 0.
OctaveRatios hypothesis_ratios(const DispersionSymbol& symbol, int k,
                               const std::vector<double>& samples, double window);

struct DerivativeCheck {
  double max_rel_error_first = 0.0;
  double max_rel_error_second = 0.0;
};

// Centered finite differences of phi against the analytic derivatives.
DerivativeCheck finite_difference_check(const DispersionSymbol& symbol,
                                        const std::vector<double>& samples);

}  // namespace rsl
