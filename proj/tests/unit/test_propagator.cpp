#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rsl/error.hpp"
#include "rsl/norms.hpp"
#include "rsl/propagator.hpp"

using namespace rsl;

namespace {

RadialProfile gaussian(int n) {
  return make_profile(n, FrequencyGrid::gauss_panels(0.0, 12.0, 48, 8),
                      [](double s) { return Complex(std::exp(-0.5 * s * s), 0.0); }, 0.0, 12.0, true);
}

}  // namespace

TEST_CASE("Schrodinger evolution of a Gaussian matches the closed form") {
  for (int n : {2, 3}) {
    NodeSet t;
    t.x = {-1.5, -0.4, 0.0, 0.3, 1.0};
    t.w.assign(t.x.size(), 1.0);
    const NodeSet r = radial_nodes(0.0, 8.0, 0.5, 4);
    const PhysicalGrid g = make_physical_grid(t, -1.5, 1.0, r, 0.0, 8.0);
    const SpaceTimeField f = evolve(schrodinger_symbol(), gaussian(n), g);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.nt(); ++i)
      for (std::size_t j = 0; j < g.nr(); ++j) {
        const Complex ref = oracle_gaussian_schrodinger(n, g.t[i], g.r[j]);
        worst = std::max(worst, std::abs(f.at(i, j) - ref) / std::abs(oracle_gaussian_schrodinger(n, g.t[i], 0.0)));
      }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("advance multiplies by the phase") {
  const RadialProfile h = gaussian(2);
  const RadialProfile a = advance(wave_symbol(), h, 0.7);
  CHECK(std::abs(a.value_at(1.3) - h.value_at(1.3) * std::polar(1.0, 0.7 * 1.3)) < 1e-14);
  CHECK(l2_norm(a) == doctest::Approx(l2_norm(h)));
}

TEST_CASE("exponential step weights integrate linear forcing exactly") {
  for (double omega : {0.0, 0.3, 5.0, 80.0}) {
    const double h = 0.37;
    const auto [w0, w1] = exponential_step_weights(omega, h);
    // f(tau) = 1 and f(tau) = tau
    const Complex i(0.0, 1.0);
    const Complex ones = omega == 0.0 ? Complex(h) : (1.0 - std::exp(-i * omega * h)) / (i * omega);
    CHECK(std::abs(w0 + w1 - ones) < 1e-13);
    const Complex ramp = omega == 0.0 ? Complex(0.5 * h * h)
                                      : (std::exp(-i * omega * h) * (1.0 + i * omega * h) - 1.0) / (omega * omega);
    CHECK(std::abs(w1 * h - ramp) < 1e-12);
  }
  // the small-argument series joins the closed form continuously
  const auto a = exponential_step_weights(0.1 / 0.37 * 0.999, 0.37), b = exponential_step_weights(0.1 / 0.37 * 1.001, 0.37);
  CHECK(std::abs(a.first - b.first) < 1e-4);
  CHECK(std::abs(a.second - b.second) < 1e-4);
}

TEST_CASE("Duhamel with constant forcing matches the closed form") {
  const DispersionSymbol s = schrodinger_symbol();
  const std::vector<double> times{-1.0, 0.0, 0.5, 2.0};
  const std::vector<double> sig{0.7, 1.3};
  const auto c = duhamel_coefficients(s, [](double, double) { return Complex(1.0, 0.0); }, times, sig);
  for (std::size_t i = 0; i < times.size(); ++i)
    for (std::size_t l = 0; l < sig.size(); ++l) {
      const double w = s.phi(sig[l]);
      // -i int_0^t e^{i(t-tau) w} dtau = (1 - e^{itw}) / w
      const Complex ref = (1.0 - std::polar(1.0, times[i] * w)) / w;
      CHECK(std::abs(c[i * sig.size() + l] - ref) < 1e-12);
    }
}

TEST_CASE("main plus error reproduces the full propagator") {
  const RadialProfile h = gaussian(2);
  NodeSet t;
  t.x = {0.0, 0.5};
  t.w = {1.0, 1.0};
  const NodeSet r = radial_nodes(2.0, 12.0, 0.5, 4);
  const PhysicalGrid g = make_physical_grid(t, 0.0, 0.5, r, 2.0, 12.0);
  const auto [main, error] = main_error_split(schrodinger_symbol(), h, 0, g);
  const SpaceTimeField full = evolve(schrodinger_symbol(), h, 0, g);
  for (std::size_t k = 0; k < full.values.size(); ++k)
    CHECK(std::abs(main.values[k] + error.values[k] - full.values[k]) < 1e-10);
  const PhysicalGrid near = make_physical_grid(t, 0.0, 0.5, radial_nodes(0.5, 2.0, 0.5, 4), 0.5, 2.0);
  CHECK_THROWS_AS(main_error_split(schrodinger_symbol(), h, 0, near), Error);
}

TEST_CASE("half-wave combination matches d'Alembert in 3D") {
  // cos(t sqrt(-Delta)) g = (S(t) + S(-t)) g / 2 for g with real transform
  const RadialProfile h = gaussian(3);
  NodeSet t;
  t.x = {0.0, 1.0, 2.5};
  t.w.assign(3, 1.0);
  NodeSet tn = t;
  for (double& x : tn.x) x = -x;
  const NodeSet r = radial_nodes(0.05, 10.0, 0.25, 4);
  const PhysicalGrid gp = make_physical_grid(t, 0.0, 2.5, r, 0.05, 10.0);
  const PhysicalGrid gm = make_physical_grid(tn, -2.5, 0.0, r, 0.05, 10.0);
  const SpaceTimeField plus = evolve(wave_symbol(), h, gp), minus = evolve(wave_symbol(), h, gm);
  auto g = [](double x) { return std::exp(-0.5 * x * x); };
  double err = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      const double o = oracle_wave_cosine_3d(g, t.x[i], r.x[j]);
      const double v = 0.5 * (plus.at(i, j) + minus.at(i, j)).real();
      err += (v - o) * (v - o) * r.x[j] * r.x[j] * r.w[j];
      ref += o * o * r.x[j] * r.x[j] * r.w[j];
    }
  CHECK(std::sqrt(err / ref) < 1e-5);
}
