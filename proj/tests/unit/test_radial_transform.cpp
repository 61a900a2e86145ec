#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rsl/error.hpp"
#include "rsl/radial_transform.hpp"
#include "rsl/special_functions.hpp"

using namespace rsl;

namespace {

RadialProfile gaussian(int n) {
  return make_profile(n, FrequencyGrid::gauss_panels(0.0, 12.0, 48, 8),
                      [](double s) { return Complex(std::exp(-0.5 * s * s), 0.0); }, 0.0, 12.0, true);
}

}  // namespace

TEST_CASE("cutoffs") {
  CHECK(bump(0.5) == 1.0);
  CHECK(bump(2.5) == 0.0);
  CHECK(bump(1.5) == doctest::Approx(0.5));
  CHECK(dyadic_cutoff(0, 0.4) == 0.0);
  CHECK(dyadic_cutoff(0, 2.1) == 0.0);
  // partition of unity
  for (double s : {0.37, 1.0, 3.3, 17.0}) {
    double sum = 0.0;
    for (int k = -10; k <= 10; ++k) sum += dyadic_cutoff(k, s);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("l2 norm of the unit indicator in 2D") {
  const RadialProfile h = make_profile(2, FrequencyGrid::gauss_panels(1.0, 2.0, 4, 8),
                                       [](double) { return Complex(1.0, 0.0); }, 1.0, 2.0, true);
  CHECK(l2_norm(h) == doctest::Approx(std::sqrt(3.0 * std::numbers::pi)).epsilon(1e-12));
  CHECK(sphere_area(2) == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(sphere_area(3) == doctest::Approx(4.0 * std::numbers::pi));
}

TEST_CASE("Gaussian is a fixed point of the unitary transform") {
  for (int n = 2; n <= 4; ++n)
    for (double r : {0.0, 0.5, 1.7, 4.0}) {
      const Complex v = fourier_bessel(gaussian(n), r);
      CHECK(v.real() == doctest::Approx(std::exp(-0.5 * r * r)).epsilon(1e-9));
      CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("inverse transform recovers the profile") {
  const int n = 3;
  const NodeSet r = radial_nodes(0.0, 14.0, 0.25, 8);
  std::vector<Complex> samples;
  for (double x : r.x) samples.push_back(std::exp(-0.5 * x * x));
  for (double s : {0.3, 1.0, 2.2})
    CHECK(inverse_fourier_bessel(n, r, samples, s).real() == doctest::Approx(std::exp(-0.5 * s * s)).epsilon(1e-9));
}

TEST_CASE("projection restricts the support to the dyadic band") {
  const RadialProfile p = project(gaussian(2), 0);
  CHECK(p.support_lo == doctest::Approx(0.5));
  CHECK(p.support_hi == doctest::Approx(2.0));
  CHECK(p.value_at(0.3) == Complex{});
  CHECK(p.value_at(1.0).real() == doctest::Approx(std::exp(-0.5) * dyadic_cutoff(0, 1.0)));
}

TEST_CASE("grids") {
  const NodeSet r = radial_nodes(0.0, 10.0, 0.5, 4);
  double sum = 0.0;
  for (double w : r.w) sum += w;
  CHECK(sum == doctest::Approx(10.0));
  const PhysicalGrid g = make_physical_grid(time_nodes(0.0, 1.0, 0.5, 4), 0.0, 1.0, r, 0.0, 10.0);
  CHECK(g.annulus.size() == g.nr());
  CHECK(annulus_of(3.0) == 2);
  CHECK(annulus_of(4.0) == 3);
  const NodeSet t = symmetric_time_nodes(0.0, 2.0, 0.5, 4);
  CHECK(t.x.front() == doctest::Approx(-t.x.back()));
  QuadraturePolicy bad;
  bad.max_phase_step = 1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("oscillatory nodes refuse unresolvable rates") {
  QuadraturePolicy p;
  p.refinement_limit = 4;
  try {
    oscillatory_nodes(1.0, 2.0, 1e6, p);
    FAIL("expected QuadratureUnderresolved");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::QuadratureUnderresolved);
  }
}
