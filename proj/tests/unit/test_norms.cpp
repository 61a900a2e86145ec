#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rsl/error.hpp"
#include "rsl/fit.hpp"
#include "rsl/norms.hpp"
#include "rsl/quadrature.hpp"

using namespace rsl;

namespace {

SpaceTimeField constant_field(int n, double value, double T, double R) {
  SpaceTimeField f;
  f.n = n;
  f.grid = make_physical_grid(time_nodes(0.0, T, 0.25, 4), 0.0, T, radial_nodes(0.0, R, 0.25, 4), 0.0, R);
  f.values.assign(f.grid.nt() * f.grid.nr(), Complex(value, 0.0));
  return f;
}

}  // namespace

TEST_CASE("mixed norm of a constant on a disc") {
  const SpaceTimeField f = constant_field(2, 3.0, 2.0, 4.0);
  // |B_4| = 16 pi in 2D
  const double area = 16.0 * std::numbers::pi;
  for (double q : {2.0, 4.0, 6.0})
    for (double r : {2.0, 3.0, 10.0 / 3.0}) {
      const double ref = 3.0 * std::pow(area, 1.0 / r) * std::pow(2.0, 1.0 / q);
      CHECK(mixed_norm(f, {q, r, std::nullopt, {}}) == doctest::Approx(ref).epsilon(1e-12));
    }
  CHECK(mixed_norm(f, {kInf, kInf, std::nullopt, {}}) == doctest::Approx(3.0));
}

TEST_CASE("regions and windows") {
  const SpaceTimeField f = constant_field(3, 1.0, 2.0, 4.0);
  const double ball = 4.0 / 3.0 * std::numbers::pi;
  // annulus j is [2^{j-1}, 2^j)
  CHECK(mixed_norm(f, {2.0, 2.0, std::nullopt, RadialRegion::shell(1)}) ==
        doctest::Approx(std::sqrt(2.0 * ball * 7.0)).epsilon(1e-12));
  CHECK(mixed_norm(f, {2.0, 2.0, std::nullopt, RadialRegion::shell(2)}) ==
        doctest::Approx(std::sqrt(2.0 * ball * 56.0)).epsilon(1e-12));
  CHECK(mixed_norm(f, {2.0, 2.0, std::nullopt, RadialRegion::beyond(2.0)}) ==
        doctest::Approx(std::sqrt(2.0 * ball * 56.0)).epsilon(1e-12));
  CHECK(mixed_norm(f, {1.0, kInf, std::make_pair(0.5, 1.5), {}}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(mixed_norm(f, {2.0, 2.0, std::nullopt, RadialRegion::shell(3)}), Error);
  CHECK_THROWS_AS(mixed_norm(f, {2.0, 2.0, std::make_pair(0.0, 3.0), {}}), Error);
  CHECK_THROWS_AS(mixed_norm(f, {0.5, 2.0, std::nullopt, {}}), Error);
}

TEST_CASE("Hoelder consistency on random fields") {
  SpaceTimeField f = constant_field(2, 0.0, 1.0, 2.0);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (auto& v : f.values) v = Complex(g(rng), g(rng));
  const double measure = 4.0 * std::numbers::pi;  // |[0,1] x B_2|
  for (double a : {2.0, 3.0, 4.0})
    for (double b : {4.0, 6.0, 8.0}) {
      if (b <= a) continue;
      const double lo = mixed_norm(f, {a, a, std::nullopt, {}});
      const double hi = mixed_norm(f, {b, b, std::nullopt, {}});
      CHECK(lo <= std::pow(measure, 1.0 / a - 1.0 / b) * hi * (1.0 + 1e-12));
    }
}

TEST_CASE("adaptive window saturates for decaying slabs") {
  // |F|^2 = e^{-t} on a unit-measure region, so the L^2 norm tends to 1
  auto slab = [](double lo, double hi) {
    SpaceTimeField f;
    f.n = 2;
    f.grid = make_physical_grid(time_nodes(lo, hi, 0.05, 8), lo, hi, composite_gauss(0.0, 1.0 / std::sqrt(std::numbers::pi), 1, 4), 0.0, 1.0);
    for (double t : f.grid.t)
      for (std::size_t j = 0; j < f.grid.nr(); ++j) f.values.push_back(std::exp(-0.5 * t));
    return f;
  };
  const WindowResult w = adaptive_window(slab, {2.0, 2.0, std::nullopt, {}}, 1.0, 1e-6, 12);
  CHECK(w.converged);
  CHECK(w.norm == doctest::Approx(1.0).epsilon(1e-5));
  auto zero = [](double lo, double hi) {
    SpaceTimeField f;
    f.grid = make_physical_grid(time_nodes(lo, hi, 1.0, 2), lo, hi, composite_gauss(0.0, 1.0, 1, 2), 0.0, 1.0);
    f.values.assign(f.grid.nt() * f.grid.nr(), Complex{});
    return f;
  };
  const WindowResult z = adaptive_window(zero, {2.0, 2.0, std::nullopt, {}}, 3.0, 1e-2);
  CHECK(z.converged);
  CHECK(z.T == 3.0);
  CHECK(z.norm == 0.0);
}

TEST_CASE("sobolev norm scales with frequency weight") {
  const RadialProfile h = make_profile(2, FrequencyGrid::gauss_panels(1.0, 2.0, 8, 8),
                                       [](double) { return Complex(1.0, 0.0); }, 1.0, 2.0, true);
  // 2 pi int_1^2 s^{2 sigma + 1} ds with sigma = 1: 2 pi (2^4 - 1) / 4
  CHECK(sobolev_norm(h, 1.0) == doctest::Approx(std::sqrt(2.0 * std::numbers::pi * 15.0 / 4.0)).epsilon(1e-12));
  CHECK(sobolev_norm(h, 0.0) == doctest::Approx(l2_norm(h)).epsilon(1e-12));
}

TEST_CASE("exponent fits") {
  const ExponentFit f = fit_log2({0, 1, 2, 3}, {1.0, 2.0, 4.0, 8.0}, 1.0);
  CHECK(f.slope == doctest::Approx(1.0));
  CHECK(f.max_residual < 1e-12);
  CHECK(!f.unreliable());
  CHECK_THROWS_AS(fit_log2({0, 1}, {1.0, 0.0}, 0.0), Error);
  CHECK_THROWS_AS(fit_exponent({1.0, 1.0}, {0.0, 1.0}, 0.0), Error);
}

TEST_CASE("graded quadrature handles endpoint singularities") {
  const double v = integrate_graded([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, true, false);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-8));
  const double v16 = integrate_graded([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, true, false, 40, 16);
  CHECK(v16 == doctest::Approx(2.0).epsilon(1e-11));
  // right singularity at the origin, where doubles resolve it
  const double w = integrate_graded([](double x) { return std::pow(-x, -0.75); }, -1.0, 0.0, false, true);
  CHECK(w == doctest::Approx(4.0).epsilon(1e-8));
}
