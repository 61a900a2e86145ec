// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <gsl/gsl_sf_gamma.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "rsl/admissibility.hpp"
#include "rsl/estimates.hpp"
#include "rsl/nonlinear.hpp"
#include "rsl/propagator.hpp"
#include "rsl/quadrature.hpp"
#include "rsl/special_functions.hpp"

using namespace rsl;

namespace tol {
constexpr double slope_exact = 0.05;
constexpr double slope_loose = 0.1;
constexpr double sweep_seconds = 600.0;
constexpr double growth = 1e-2;
constexpr double gaussian_oracle = 1e-6;
constexpr double wave_oracle = 1e-5;
constexpr double bessel_oracle = 1e-8;
constexpr double slice_l2 = 1e-4;
constexpr double s0_digits = 1e-12;
constexpr double contraction = 0.5;
constexpr double scattering = 1e-2;
constexpr double mass_drift = 1e-4;
constexpr double nonlinear_seconds = 1800.0;
constexpr double refinement = 0.02;
}  // namespace tol

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Runs a criterion, turning exceptions into a FAIL line.
void guarded(const std::string& id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<double> powers_of_two(int lo, int hi) {
  std::vector<double> v;
  for (int e = lo; e <= hi; ++e) v.push_back(std::ldexp(1.0, e));
  return v;
}

// Slopes measured at the base resolution and at the refined one.
struct Refinement {
  std::string name;
  double base = 0.0, fine = 0.0;
};
std::vector<Refinement> refinements;

// Halved phase step and doubled time window.
NormPolicy refined(NormPolicy p) {
  p.quadrature.max_phase_step /= 2.0;
  p.T0 *= 2.0;
  return p;
}

void frequency_sweep(const std::string& id, const DispersionSymbol& symbol, int n, double q,
                     const std::vector<int>& ks, double target, bool timed) {
  const auto t0 = Clock::now();
  const FrequencyScalingResult r = fit_frequency_scaling(symbol, n, q, ks);
  const double secs = seconds_since(t0);
  const bool slope_ok = std::abs(r.fit.slope - target) <= tol::slope_exact;
  const bool time_ok = !timed || secs <= tol::sweep_seconds;
  report(id, slope_ok && time_ok,
         fmt("%s n=%d q=%.4g slope %.4f target %.4f residual %.2g, %.1f s", symbol.name.c_str(), n, q, r.fit.slope,
             target, r.fit.max_residual, secs));
  const FrequencyScalingResult f = fit_frequency_scaling(symbol, n, q, ks, refined({}));
  refinements.push_back({id, r.fit.slope, f.fit.slope});
}

void criterion_1() {
  guarded("1a", [] { frequency_sweep("1a", schrodinger_symbol(), 2, 4.0, range(-3, 3), 0.0, true); });
  guarded("1b", [] { frequency_sweep("1b", schrodinger_symbol(), 2, 10.0 / 3.0, range(-3, 3), -0.2, true); });
}

void criterion_2() {
  guarded("2", [] { frequency_sweep("2", wave_symbol(), 3, 4.0, range(-3, 3), 0.5, false); });
}

void criterion_3() {
  guarded("3", [] {
    const std::vector<double> qs = {10.0 / 3.0, 4.0, 6.0};
    bool pass = true;
    std::string detail;
    for (AnnulusRegime regime : {AnnulusRegime::inner, AnnulusRegime::outer_curvature}) {
      const std::vector<int> js = regime == AnnulusRegime::inner ? range(-6, -2) : range(3, 7);
      const AnnulusScalingResult base = fit_annulus_scaling(schrodinger_symbol(), 2, qs, 0, js, regime);
      const AnnulusScalingResult fine = fit_annulus_scaling(schrodinger_symbol(), 2, qs, 0, js, regime, refined({}));
      const char* tag = regime == AnnulusRegime::inner ? "inner" : "outer";
      for (std::size_t i = 0; i < qs.size(); ++i) {
        const double bound = annulus_predicted_slope(regime, 2, qs[i]) + tol::slope_loose;
        pass = pass && base.fits[i].slope <= bound;
        detail += fmt("%s q=%.3g %.3f<=%.3f ", tag, qs[i], base.fits[i].slope, bound);
        refinements.push_back({fmt("3 %s q=%.3g", tag, qs[i]), base.fits[i].slope, fine.fits[i].slope});
      }
    }
    report("3", pass, detail);
  });
}

void criterion_4() {
  guarded("4", [] {
    WaveCounterOptions opt;
    opt.tol = tol::growth;
    const GrowthReport critical = counterexample_wave(2, 4.0, powers_of_two(4, 10), opt);
    // the control saturates slowly, so its sweep runs further out
    const GrowthReport control = counterexample_wave(2, 4.5, powers_of_two(4, 14), opt);
    const bool pass = critical.monotone && !critical.saturated && control.saturated;
    report("4", pass,
           fmt("q=4 monotone %d saturated %d last increment %.3g; q=4.5 saturated %d last increment %.3g",
               critical.monotone, critical.saturated, critical.increments.back(), control.saturated,
               control.increments.back()));
    WaveCounterOptions fine = opt;
    fine.spacing /= 2.0;
    fine.time_margin *= 2.0;
    refinements.push_back({"4", critical.fit.slope, counterexample_wave(2, 4.0, powers_of_two(4, 10), fine).fit.slope});
  });
}

void criterion_5() {
  guarded("5", [] {
    const std::vector<int> js = range(4, 8);
    const SchrodingerCounterResult below = counterexample_schrodinger(2, 3.0, js);
    const SchrodingerCounterResult at = counterexample_schrodinger(2, 10.0 / 3.0, js);
    const bool pass = below.fit.slope >= 1.0 / 6.0 - tol::slope_exact && std::abs(at.fit.slope) <= tol::slope_exact;
    report("5", pass, fmt("q=3 slope %.4f >= %.4f; q=10/3 slope %.4f", below.fit.slope, 1.0 / 6.0 - tol::slope_exact,
                          at.fit.slope));
    refinements.push_back({"5 q=3", below.fit.slope, counterexample_schrodinger(2, 3.0, js, 128).fit.slope});
    refinements.push_back({"5 q=10/3", at.fit.slope, counterexample_schrodinger(2, 10.0 / 3.0, js, 128).fit.slope});
  });
}

void criterion_6() {
  guarded("6", [] {
    const std::vector<int> ks = range(2, 6);
    const MaximalResult two = maximal_check(2.0, ks);
    const MaximalResult one = maximal_check(1.0, ks);
    const bool pass = std::abs(two.fit.slope - 0.5) <= tol::slope_loose && std::abs(one.fit.slope - 0.5) <= tol::slope_loose;
    report("6", pass, fmt("a=2 slope %.4f target 0.5; a=1 slope %.4f target 0.5", two.fit.slope, one.fit.slope));
    refinements.push_back({"6 a=2", two.fit.slope, maximal_check(2.0, ks, 2.0).fit.slope});
    refinements.push_back({"6 a=1", one.fit.slope, maximal_check(1.0, ks, 2.0).fit.slope});
  });
}

void criterion_7() {
  guarded("7", [] {
    const std::vector<double> deltas = {0.125, 0.0625, 0.03125, 0.015625};
    bool pass = true;
    std::string detail;
    for (double q : {3.0, 4.0}) {
      const double target = -(2.0 / q + 2.0 / q - 1.0);
      const GrowthReport g = knapp_fractional(1.5, deltas, q, q);
      pass = pass && std::abs(g.fit.slope - target) <= tol::slope_loose;
      detail += fmt("(%g,%g) slope %.4f target %.4f ", q, q, g.fit.slope, target);
      refinements.push_back({fmt("7 q=%g", q), g.fit.slope, knapp_fractional(1.5, deltas, q, q, 40, 96).fit.slope});
    }
    report("7", pass, detail);
  });
}

// J_nu(x) from the Poisson integral
// (x/2)^nu / (sqrt(pi) Gamma(nu + 1/2)) int_0^pi sin^{2 nu} th cos(x cos th) dth.
double bessel_by_integral(double nu, double x) {
  const NodeSet th = composite_gauss(0.0, std::numbers::pi, 64 + static_cast<int>(x), 16);
  double acc = 0.0;
  for (std::size_t i = 0; i < th.size(); ++i)
    acc += th.w[i] * std::pow(std::sin(th.x[i]), 2.0 * nu) * std::cos(x * std::cos(th.x[i]));
  return std::pow(0.5 * x, nu) / (std::sqrt(std::numbers::pi) * gsl_sf_gamma(nu + 0.5)) * acc;
}

void criterion_8() {
  guarded("8 gaussian", [] {
    const RadialProfile h = make_profile(2, FrequencyGrid::gauss_panels(0.0, 12.0, 48, 8),
                                         [](double s) { return Complex(std::exp(-0.5 * s * s), 0.0); }, 0.0, 12.0, true);
    NodeSet t;
    t.x = {-2.0, -0.5, 0.0, 0.25, 1.0, 2.0};
    t.w.assign(t.x.size(), 1.0);
    const NodeSet r = radial_nodes(0.0, 12.0, 0.5, 4);
    const SpaceTimeField f = evolve(schrodinger_symbol(), h, make_physical_grid(t, -2.0, 2.0, r, 0.0, 12.0));
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < f.grid.nt(); ++i)
      for (std::size_t j = 0; j < f.grid.nr(); ++j) {
        const Complex ref = oracle_gaussian_schrodinger(2, f.grid.t[i], f.grid.r[j]);
        err = std::max(err, std::abs(f.at(i, j) - ref));
        scale = std::max(scale, std::abs(ref));
      }
    report("8 gaussian", err / scale <= tol::gaussian_oracle, fmt("relative sup error %.3g", err / scale));
  });
  guarded("8 wave", [] {
    const RadialProfile h = make_profile(3, FrequencyGrid::gauss_panels(0.0, 12.0, 48, 8),
                                         [](double s) { return Complex(std::exp(-0.5 * s * s), 0.0); }, 0.0, 12.0, true);
    NodeSet t;
    t.x = {0.0, 0.5, 1.0, 2.5, 4.0};
    t.w.assign(t.x.size(), 1.0);
    NodeSet tn = t;
    for (double& x : tn.x) x = -x;
    const NodeSet r = radial_nodes(0.02, 12.0, 0.25, 4);
    const SpaceTimeField plus = evolve(wave_symbol(), h, make_physical_grid(t, 0.0, 4.0, r, 0.02, 12.0));
    const SpaceTimeField minus = evolve(wave_symbol(), h, make_physical_grid(tn, -4.0, 0.0, r, 0.02, 12.0));
    auto g = [](double x) { return std::exp(-0.5 * x * x); };
    double err = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j) {
        const double o = oracle_wave_cosine_3d(g, t.x[i], r.x[j]);
        const double v = 0.5 * (plus.at(i, j) + minus.at(i, j)).real();
        err += (v - o) * (v - o) * r.x[j] * r.x[j] * r.w[j];
        ref += o * o * r.x[j] * r.x[j] * r.w[j];
      }
    report("8 wave", std::sqrt(err / ref) <= tol::wave_oracle, fmt("relative L2 error %.3g", std::sqrt(err / ref)));
  });
  guarded("8 bessel", [] {
    double worst = 0.0;
    for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0})
      for (double x : log_grid(1e-3, 200.0, 60)) {
        const double a = bessel_j(nu, x), b = bessel_by_integral(nu, x);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
      }
    report("8 bessel", worst <= tol::bessel_oracle, fmt("max error %.3g", worst));
  });
}

void criterion_9() {
  guarded("9", [] {
    NormPolicy p;
    p.R0 = 60.0;
    double worst = 0.0;
    std::string where;
    for (const DispersionSymbol& s : builtin_symbols())
      for (int k = -4; k <= 4; ++k) {
        const SliceL2Report r = slice_l2_check(s, 2, k, {-1.0, -0.5, 0.0, 0.5, 1.0}, p);
        if (r.max_deviation > worst) {
          worst = r.max_deviation;
          where = s.name + fmt(" k=%d", k);
        }
      }
    report("9", worst <= tol::slice_l2, fmt("max slice deviation %.3g (%s)", worst, where.c_str()));
  });
}

void criterion_10() {
  guarded("10", [] {
    bool vertices = true;
    for (int n = 2; n <= 5; ++n)
      for (const RegionVertex& v : region_vertices(n))
        vertices = vertices && on_schrodinger_boundary(n, Exponent::from_reciprocal(v.inv_q), Exponent::from_reciprocal(v.inv_r));
    bool pairs = true;
    int checked = 0;
    for (int n = 2; n <= 5; ++n) {
      // wave exponents strictly between s0(n) and 1/2 on a rational lattice
      for (int i = 1; i < 40; ++i) {
        const Rational sw(i, 80);
        if (to_double(sw) <= s0(n)) continue;
        const PairChoice c = choose_pairs_nlw(n, sw);
        pairs = pairs && verify_nlw_pairs(n, sw, c).all();
        ++checked;
      }
      // Schrodinger regularities in [(1-n)/(2n+1), 0)
      for (int i = 1; i < 40; ++i) {
        const Rational s = Rational(1 - n, 2 * n + 1) * Rational(i, 40);
        for (const Rational& sch : {s, Rational(1 - n, 2 * n + 1)}) {
          if (sch > s) continue;
          const PairChoice c = choose_pairs_nls(n, s, sch);
          pairs = pairs && verify_nls_pairs(n, s, sch, c).all();
          ++checked;
        }
      }
    }
    const double e2 = std::abs(s0(2) - (5.0 - std::sqrt(17.0)) / 4.0);
    const double e3 = std::abs(s0(3) - (12.0 - std::sqrt(129.0)) / 6.0);
    const bool pass = vertices && pairs && e2 <= tol::s0_digits && e3 <= tol::s0_digits;
    report("10", pass, fmt("vertices on boundary %d, %d pair choices exact %d, s0 errors %.2g %.2g", vertices, checked,
                           pairs, e2, e3));
  });
}

void criterion_11() {
  const auto t0 = Clock::now();
  guarded("11 nls", [] {
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 1; s <= 8; ++s) seeds.push_back(s);
    const ExperimentReport r = nls_small_data_experiment(2, -0.1, 1e-3, seeds);
    const bool pass = r.all_converged() && r.max_contraction() <= tol::contraction &&
                      r.deviations_non_increasing() && r.max_relative_deviation() <= tol::scattering;
    report("11 nls", pass,
           fmt("%zu runs converged %d, max contraction %.3g, deviation non-increasing %d, max relative deviation %.3g",
               r.runs.size(), r.all_converged(), r.max_contraction(), r.deviations_non_increasing(),
               r.max_relative_deviation()));
  });
  guarded("11 fnls", [] {
    // mass critical power p = 2 sigma / n
    const ExperimentReport r = fnls_experiment(2, 1.5, 1.5, 0.0, 1e-3, {1});
    report("11 fnls", r.all_converged() && r.max_mass_drift() <= tol::mass_drift,
           fmt("converged %d, relative mass drift %.3g", r.all_converged(), r.max_mass_drift()));
  });
  const double secs = seconds_since(t0);
  report("11 runtime", secs <= tol::nonlinear_seconds, fmt("%.1f s", secs));
}

void criterion_12() {
  bool pass = !refinements.empty();
  std::string detail;
  for (const Refinement& r : refinements) {
    const double d = std::abs(r.fine - r.base);
    pass = pass && d <= tol::refinement;
    detail += fmt("[%s %.4f] ", r.name.c_str(), d);
  }
  report("12", pass, detail);
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  criterion_8();
  criterion_10();
  criterion_9();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_1();
  criterion_11();
  criterion_12();
  std::printf("%d failing, %.1f s total\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
