#include <doctest.h>
#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <numbers>

#include "rsl/error.hpp"
#include "rsl/special_functions.hpp"

using namespace rsl;

TEST_CASE("bessel_j agrees with GSL across orders and arguments") {
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.5}) {
    for (double x : log_grid(1e-3, 400.0, 120)) {
      const double ref = gsl_sf_bessel_Jnu(nu, x);
      const double got = bessel_j(nu, x);
      CHECK(std::abs(got - ref) <= 1e-10 * std::max(1.0, std::abs(ref)) + 1e-13);
    }
  }
}

TEST_CASE("bessel_j special values and domain") {
  CHECK(bessel_j(0.0, 0.0) == doctest::Approx(1.0));
  CHECK(bessel_j(1.0, 0.0) == doctest::Approx(0.0));
  CHECK(bessel_j(-0.5, 1.0) == doctest::Approx(std::sqrt(2.0 / std::numbers::pi) * std::cos(1.0)));
  CHECK_THROWS_AS(bessel_j(0.0, -1.0), Error);
  CHECK_THROWS_AS(bessel_j(-1.0, 1.0), Error);
}

TEST_CASE("radial kernel closed forms") {
  CHECK(radial_kernel(2, 0.0) == doctest::Approx(1.0));
  for (double x : {0.3, 1.0, 7.5, 40.0}) {
    const double k3 = std::sqrt(2.0 / std::numbers::pi) * std::sin(x) / x;
    CHECK(radial_kernel(3, x) == doctest::Approx(k3).epsilon(1e-12));
    CHECK(radial_kernel(2, x) == doctest::Approx(gsl_sf_bessel_J0(x)).epsilon(1e-10));
  }
  // finite at the origin for every n
  for (int n = 2; n <= 6; ++n) CHECK(std::isfinite(radial_kernel(n, 0.0)));
}

TEST_CASE("asymptotic split reassembles the kernel") {
  for (int n = 2; n <= 5; ++n)
    for (double r : {1.0, 2.5, 10.0, 100.0}) {
      const BesselSplit s = bessel_asymptotic_split(n, r);
      CHECK(s.kernel() == doctest::Approx(radial_kernel(n, r)).epsilon(1e-10));
      CHECK(std::abs(s.main_plus - std::conj(s.main_minus)) < 1e-14);
    }
  CHECK_THROWS_AS(bessel_asymptotic_split(2, 0.5), Error);
}

TEST_CASE("remainder decays one power faster than the main term") {
  const auto grid = log_grid(1.0, 1e3, 200);
  for (int n = 2; n <= 4; ++n) {
    const double c = remainder_decay_constant(n, grid);
    CHECK(std::isfinite(c));
    CHECK(c < 2.0);
  }
}

TEST_CASE("uniform Bessel bound") {
  const auto grid = log_grid(1e-3, 1e3, 400);
  for (double nu : {0.0, 0.5, 1.0, 2.0}) CHECK(bessel_bound_check(nu, grid).pass);
}
