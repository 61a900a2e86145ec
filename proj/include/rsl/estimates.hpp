#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rsl/dispersion.hpp"
#include "rsl/fit.hpp"
#include "rsl/norms.hpp"
#include "rsl/propagator.hpp"

namespace rsl {

enum class BoundForm { dispersive, curvature };

// Per-k log2 rate of the frequency-localized bound.
//   dispersive: n/2 - (n + m)/q                        for q > 2n/(n-1)
//   curvature:  n/2 - (n + m)/q + (1/4 - 1/(2q))(m - a) for (4n+2)/(2n-1) <= q <= 6
double predicted_exponent(const DispersionSymbol& symbol, int n, double q, int k, BoundForm form);

// Upper-bound semantics shared by the slope checks.
struct SlopeVerdict {
  bool within_bound = false;  // measured <= predicted + loose
  bool exact = false;         // |measured - predicted| <= tight
  bool pass = false;
};
SlopeVerdict judge_upper_bound(const ExponentFit& fit, bool pure_power, double tight = 0.05,
                               double loose = 0.1);

// Grid and window controls for space-time norm measurements. Windows are
// scale aware: T = T0 2^{-k m(k)} and r_max = T sup phi' + R0 2^{-k}.
struct NormPolicy {
  QuadraturePolicy quadrature;
  double T0 = 4.0;
  double R0 = 40.0;
  double tol = 1e-2;
  int max_doublings = 10;
  int order = 8;
  double t_panel_factor = 1.0;  // t panel = factor * pi / (phi(2^{k+1}) - phi(2^{k-1}))
  double r_panel_factor = 1.0;  // r panel = factor * pi / (2 * 2^{k+1})
  bool adaptive = true;         // false: single window [0, T0 2^{-k m(k)}]
  bool extrapolate_tail = true;  // geometric continuation of the slab powers
};

// L^2-normalized band data h = s^{-(n-1)/2} on [2^{k-1}, 2^{k+1}] (projection
// applied by the propagator).
RadialProfile flat_band_profile(int n, int k);

// Slab generator for S(t) P_k h: times t_lo <= |t| <= t_hi, r in [0, r_max(t_hi)].
SlabGenerator band_slab(const DispersionSymbol& symbol, const RadialProfile& profile, int k,
                        const NormPolicy& policy);

struct FrequencyScalingResult {
  ExponentFit fit;
  std::vector<double> norms;
  std::vector<double> windows;
  std::vector<bool> converged;
  BoundForm form = BoundForm::dispersive;
  SlopeVerdict verdict;
};

// N(k) = ||S(t) P_k u0||_{L^q_{t,x}} for normalized flat band data; throws
// NonConvergent if the adaptive window fails to saturate.
FrequencyScalingResult fit_frequency_scaling(const DispersionSymbol& symbol, int n, double q,
                                             const std::vector<int>& ks,
                                             const NormPolicy& policy = {});

struct SliceL2Report {
  std::string symbol;
  int n = 2;
  int k = 0;
  double data_norm = 0.0;           // ||P_k h||_2
  std::vector<double> times;
  std::vector<double> slice_norms;  // ||S(t) P_k h||_{L^2_x} at each time
  double max_deviation = 0.0;       // max relative departure from data_norm
};

// Spatial L^2 norm of the evolved flat band datum on the time slices
// t = c T0 2^{-k m(k)}, c in fractions, over r <= t sup phi' + R0 2^{-k}.
SliceL2Report slice_l2_check(const DispersionSymbol& symbol, int n, int k,
                             const std::vector<double>& fractions = {-1.0, -0.5, 0.0, 0.5, 1.0},
                             const NormPolicy& policy = {});

enum class AnnulusRegime { inner, outer_dispersive, outer_curvature };

double annulus_predicted_slope(AnnulusRegime regime, int n, double q);

struct AnnulusScalingResult {
  AnnulusRegime regime = AnnulusRegime::inner;
  std::vector<double> qs;
  std::vector<int> js;
  std::vector<std::vector<double>> norms;  // [q][j]
  std::vector<double> windows;             // per j
  std::vector<ExponentFit> fits;           // per q
  std::vector<bool> pass;                  // per q: slope <= predicted + 0.1
};

// ||S(t) P_k u0||_{L^q(R x A_j)} for each j, fitted against j. One field per
// annulus serves every q.
AnnulusScalingResult fit_annulus_scaling(const DispersionSymbol& symbol, int n,
                                         const std::vector<double>& qs, int k,
                                         const std::vector<int>& js, AnnulusRegime regime,
                                         const NormPolicy& policy = {});

struct BoundReport {
  std::string quantity;
  std::vector<double> parameters;  // k values, refinement levels, ...
  std::vector<double> ratios;      // max ratio per parameter
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  double bound = 0.0;
  std::uint64_t seed = 0;
  bool pass = false;
};

// Complex Gaussian combination of fixed bumps in the scaled variable s / 2^k.
struct TrialData {
  std::vector<Complex> coefficients;
  Complex operator()(double x) const;  // x = s / 2^k
};
TrialData random_trial(std::uint64_t seed, int trial, int bumps = 8);

// ||int psi_k a e^{-it phi(s)} ds||_{L^q_t} / (2^{(1/2 - m/q)k} ||psi_k a||_{L^2}).
BoundReport smoothing_check(const DispersionSymbol& symbol, const std::vector<int>& ks,
                                  double q, int trials, std::uint64_t seed = 20240611,
                                  double bound = 10.0);

struct MaximalResult {
  ExponentFit fit;
  std::vector<double> norms;
  double predicted = 0.0;
  bool pass = false;
};

// ||sup_{|t|<=1} |int e^{it xi^a + i x xi} psi_0(xi/2^k) f dxi| ||_{L^2_x} on the
// extremal family, fitted against k.
MaximalResult maximal_check(double a, const std::vector<int>& ks, double resolution = 1.0,
                            double tolerance = 0.1);

struct HlsParameters {
  double r = 2.0, s = 2.0;  // Lebesgue exponents of f and g
  double lambda = 0.5;
  double alpha = 0.0, beta = 0.0;
  void validate() const;  // ParameterViolation
};
// Endpoint parameters for dimension n at exponent q: r = s = q', lambda = 1/2 - 1/q,
// alpha = beta = (1/2 - 1/q)(n - 1).
HlsParameters hls_parameters(int n, double q);

// int int f(x) g(y) |x|^{-alpha} |x-y|^{-lambda} |y|^{-beta} dx dy for interval indicators.
double hls_form_indicators(const HlsParameters& p, double a, double b, double c, double d);

BoundReport hls_bilinear_check(const HlsParameters& p, int refinements = 4);

struct GrowthReport {
  std::vector<double> x;       // R or delta
  std::vector<double> values;  // norms
  std::vector<double> increments;  // relative norm increments between consecutive x
  ExponentFit fit;
  bool monotone = false;
  bool saturated = false;
  bool pass = false;
  double min_ratio = 0.0, max_ratio = 0.0;  // Knapp: |u| / |D| on the region
};

struct WaveCounterOptions {
  double spacing = 0.25;
  double time_margin = 32.0;
  double tol = 1e-2;
};

// Annulus-summed main-term norm over r in [2, R] for h = 1_{[0,10]} at frequency
// scale 0; fitted against log2 R.
GrowthReport counterexample_wave(int n, double q, const std::vector<double>& Rs,
                                 const WaveCounterOptions& options = {});

struct SchrodingerCounterResult {
  ExponentFit fit;
  std::vector<double> norms;
  double predicted = 0.0;
  bool pass = false;
};

// h_j = 2^{j/2} 1_{|s-1| <= 2^{-j}} on r in [2^{2j}, 2^{2j+1}], |r - 2t| <= 2^j.
SchrodingerCounterResult counterexample_schrodinger(int n, double q, const std::vector<int>& js,
                                                    int grid_points = 64);

// 2-D tube data 1_D, D = {|xi_1 - 1| <= delta, |xi_2| <= delta}, propagated by
// |xi|^sigma on |t| <= c delta^-2, |t sigma + x_1| <= c delta^-1, |x_2| <= c delta^-1.
GrowthReport knapp_fractional(double sigma, const std::vector<double>& deltas, double q,
                              double r, int region_points = 20, int tube_points = 48,
                              double c = 0.25);

struct L6Result {
  ExponentFit fit;
  std::vector<double> norms;
  bool pass = false;
};

// 1-D L^6_{t,r} norm of int psi_k a e^{irs - it phi(s)} ds, ||psi_k a||_2 = 1.
L6Result strichartz_l6_check(const DispersionSymbol& symbol, const std::vector<int>& ks,
                             int trials, std::uint64_t seed = 20240611);

enum class Family { schrodinger, wave, fractional };

struct RetardedResult {
  BoundReport report;
  std::vector<double> coarse_ratios;
  std::vector<double> fine_ratios;
};

// ||int_0^t S(t-s) F(s) ds||_{L^q L^r} / ||F||_{L^{q~'} L^{r~'}} for randomized band
// forcings at several scales, at two resolutions.
RetardedResult retarded_strichartz_check(const DispersionSymbol& symbol, int n,
                                         std::pair<double, double> pair,
                                         std::pair<double, double> dual_pair, double gamma,
                                         int trials, std::uint64_t seed = 20240611,
                                         const std::vector<int>& ks = {-1, 0, 1});

// Optional experiment: ||S(t) P_0 u0||_{L^2_t L^{(4n-2)/(2n-3)}(2 <= r <= R)} against log R.
GrowthReport conjecture_probe(const DispersionSymbol& symbol, int n, const std::vector<double>& Rs,
                              const NormPolicy& policy = {});

}  // namespace rsl
