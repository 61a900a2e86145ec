#include <doctest.h>

#include <cmath>

#include "rsl/error.hpp"
#include "rsl/estimates.hpp"

using namespace rsl;

TEST_CASE("predicted exponents") {
  const DispersionSymbol sch = schrodinger_symbol();
  CHECK(predicted_exponent(sch, 2, 6.0, 0, BoundForm::dispersive) == doctest::Approx(1.0 / 3.0));
  CHECK(predicted_exponent(sch, 2, 4.0, 0, BoundForm::curvature) == doctest::Approx(0.0));
  CHECK(predicted_exponent(sch, 2, 10.0 / 3.0, 0, BoundForm::curvature) == doctest::Approx(-0.2));
  CHECK(predicted_exponent(wave_symbol(), 3, 4.0, 2, BoundForm::dispersive) == doctest::Approx(0.5));
  CHECK_THROWS_AS(predicted_exponent(sch, 2, 4.0, 0, BoundForm::dispersive), Error);
  CHECK_THROWS_AS(predicted_exponent(sch, 2, 7.0, 0, BoundForm::curvature), Error);
  // no curvature exponent for the wave
  CHECK_THROWS_AS(predicted_exponent(wave_symbol(), 3, 4.0, 0, BoundForm::curvature), Error);
}

TEST_CASE("upper bound verdicts") {
  ExponentFit fit;
  fit.predicted_slope = 0.5;
  fit.slope = 0.45;
  CHECK(judge_upper_bound(fit, true).pass);
  fit.slope = 0.3;
  CHECK_FALSE(judge_upper_bound(fit, true).pass);
  CHECK(judge_upper_bound(fit, false).pass);
  fit.slope = 0.65;
  CHECK_FALSE(judge_upper_bound(fit, false).pass);
  fit.slope = 0.5;
  fit.max_residual = 0.5;
  CHECK_FALSE(judge_upper_bound(fit, true).pass);
}

TEST_CASE("wave frequency scaling has slope one half in 3D") {
  const FrequencyScalingResult r = fit_frequency_scaling(wave_symbol(), 3, 4.0, {0, 1, 2});
  CHECK(r.fit.slope == doctest::Approx(0.5).epsilon(0.05));
  CHECK(r.verdict.pass);
}

TEST_CASE("flat band data are normalized after projection") {
  for (int k : {-2, 0, 3}) CHECK(l2_norm(project(flat_band_profile(2, k), k)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("time slices keep the L2 norm") {
  for (const auto& s : {schrodinger_symbol(), wave_symbol()})
    for (int k : {-2, 1}) {
      NormPolicy p;
      p.R0 = 60.0;
      CHECK(slice_l2_check(s, 2, k, {-1.0, 0.0, 1.0}, p).max_deviation < 1e-4);
    }
}

TEST_CASE("smoothing ratios stay bounded and scale free for pure powers") {
  const BoundReport r = smoothing_check(schrodinger_symbol(), {-2, 0, 2}, 4.0, 4);
  CHECK(r.pass);
  CHECK(r.max_ratio / r.min_ratio == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(smoothing_check(klein_gordon_symbol(), {-3, 0, 3}, 4.0, 4).pass);
}

TEST_CASE("maximal function rates") {
  CHECK(maximal_check(2.0, {2, 3, 4, 5, 6}).pass);
  CHECK(maximal_check(1.0, {2, 3, 4, 5, 6}).pass);
}

TEST_CASE("HLS endpoint form") {
  const HlsParameters p = hls_parameters(2, 10.0 / 3.0);
  CHECK_NOTHROW(p.validate());
  CHECK(std::isfinite(hls_form_indicators(p, 1.0, 2.0, 1.0, 2.0)));
  // dilation invariance of the endpoint form
  const double a = hls_form_indicators(p, 1.0, 2.0, 2.0, 3.0);
  const double b = hls_form_indicators(p, 4.0, 8.0, 8.0, 12.0);
  CHECK(b == doctest::Approx(a * std::pow(4.0, 2.0 - p.lambda - p.alpha - p.beta)).epsilon(1e-6));
  HlsParameters bad = p;
  bad.lambda = 1.5;
  CHECK_THROWS_AS(bad.validate(), Error);
  CHECK(hls_bilinear_check(p, 2).pass);
}

TEST_CASE("one dimensional L6 rates") {
  const L6Result s = strichartz_l6_check(schrodinger_symbol(), {-2, -1, 0, 1, 2}, 2);
  CHECK(s.fit.slope == doctest::Approx(0.0).epsilon(0.05));
  const L6Result f = strichartz_l6_check(fractional_symbol(1.5), {-2, -1, 0, 1, 2}, 2);
  CHECK(f.fit.slope == doctest::Approx(f.fit.predicted_slope).epsilon(0.05));
}

TEST_CASE("Schrodinger counterexample below and at the endpoint") {
  const SchrodingerCounterResult below = counterexample_schrodinger(2, 3.0, {4, 5, 6, 7, 8});
  CHECK(below.fit.slope >= 1.0 / 6.0 - 0.05);
  const SchrodingerCounterResult at = counterexample_schrodinger(2, 10.0 / 3.0, {4, 5, 6, 7, 8});
  CHECK(std::abs(at.fit.slope) <= 0.05);
}
