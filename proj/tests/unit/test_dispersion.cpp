#include <doctest.h>

#include <cmath>

#include "rsl/dispersion.hpp"
#include "rsl/error.hpp"

using namespace rsl;

TEST_CASE("catalog symbols satisfy the growth and curvature hypotheses") {
  for (const auto& symbol : builtin_symbols()) {
    const HypothesisReport r = verify_hypotheses(symbol, -6, 6, 16, symbol.name == "fourth-order" ? 16.0 : 10.0);
    CAPTURE(symbol.name);
    CHECK(r.pass);
  }
}

TEST_CASE("analytic derivatives match finite differences") {
  const std::vector<double> samples{0.05, 0.3, 1.0, 2.7, 11.0};
  for (const auto& symbol : builtin_symbols()) {
    CAPTURE(symbol.name);
    const DerivativeCheck c = finite_difference_check(symbol, samples);
    CHECK(c.max_rel_error_first < 1e-6);
    CHECK(c.max_rel_error_second < 1e-4);
  }
}

TEST_CASE("regime exponents") {
  const DispersionSymbol kg = klein_gordon_symbol();
  CHECK(regime_exponents(kg, 3).m == doctest::Approx(1.0));
  CHECK(regime_exponents(kg, -3).m == doctest::Approx(2.0));
  CHECK(*regime_exponents(kg, -3).alpha == doctest::Approx(2.0));
  CHECK(!wave_symbol().alpha1);
  const DispersionSymbol f = fractional_symbol(1.5);
  CHECK(regime_exponents(f, 2).m == doctest::Approx(1.5));
  CHECK(*f.power == doctest::Approx(1.5));
}

TEST_CASE("symbol lookup by name") {
  CHECK(symbol_by_name("schrodinger").phi(3.0) == doctest::Approx(9.0));
  CHECK(symbol_by_name("wave").phi(3.0) == doctest::Approx(3.0));
  CHECK(symbol_by_name("fractional:1.5").phi(4.0) == doctest::Approx(8.0));
  CHECK(symbol_by_name("klein-gordon").phi(0.0) == doctest::Approx(1.0));
  try {
    symbol_by_name("heat");
    FAIL("expected UnknownSymbol");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownSymbol);
  }
  try {
    symbol_by_name("fractional:abc");
    FAIL("expected UnknownSigma");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownSigma);
  }
}

TEST_CASE("non-positive samples are rejected") {
  CHECK_THROWS_AS(hypothesis_ratios(schrodinger_symbol(), 0, {1.0, 0.0}, 10.0), Error);
}
