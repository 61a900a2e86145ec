#include <doctest.h>

#include <cmath>

#include "rsl/admissibility.hpp"
#include "rsl/error.hpp"

using namespace rsl;

namespace {
Exponent E(const char* s) { return Exponent::parse(s); }
Rational Q(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("exact exponents") {
  CHECK(E("10/3").reciprocal() == Q("3/10"));
  CHECK(E("inf").is_infinite());
  CHECK(E("3.5").value() == Q("7/2"));
  CHECK(E("4").conjugate() == E("4/3"));
  CHECK(Exponent::from_double(10.0 / 3.0) == E("10/3"));
  CHECK(to_string(Q("-0.25")) == "-1/4");
  CHECK_THROWS_AS(E("1/2"), Error);
  CHECK_THROWS_AS(Q("x"), Error);
}

TEST_CASE("Schrodinger region") {
  const AdmissibilityResult end = is_radial_schrodinger_admissible(2, E("10/3"), E("10/3"));
  CHECK(end.admissible());
  CHECK(end.boundary);
  CHECK(is_radial_schrodinger_admissible(2, E("inf"), E("2")).admissible());
  CHECK(is_radial_schrodinger_admissible(2, E("4"), E("4")).admissible());
  CHECK_FALSE(is_radial_schrodinger_admissible(2, E("3"), E("3")).admissible());
  // strictly inside, below the threshold exponent
  CHECK(is_radial_schrodinger_admissible(3, E("2"), E("14/3")).admissible());
  CHECK(is_radial_schrodinger_admissible(3, E("2"), E("10/3")).verdict == Verdict::no);
}

TEST_CASE("region vertices sit on the boundary") {
  for (int n = 2; n <= 5; ++n)
    for (const RegionVertex& v : region_vertices(n))
      CHECK(on_schrodinger_boundary(n, Exponent::from_reciprocal(v.inv_q), Exponent::from_reciprocal(v.inv_r)));
}

TEST_CASE("gap conditions") {
  CHECK(gap_condition(Equation::schrodinger, 2, E("4"), E("4"), Rational(0)));
  CHECK_FALSE(gap_condition(Equation::schrodinger, 2, E("10/3"), E("10/3"), Rational(0)));
  CHECK(gap_condition(Equation::wave, 3, E("4"), E("4"), Q("1/2")));
  CHECK(gap_condition(Equation::fractional, 2, E("3"), E("3"), Q("-1/6"), Q("3/2")));
}

TEST_CASE("thresholds") {
  CHECK(s0(2) == doctest::Approx((5.0 - std::sqrt(17.0)) / 4.0).epsilon(1e-12));
  CHECK(s0(3) == doctest::Approx((12.0 - std::sqrt(129.0)) / 6.0).epsilon(1e-12));
  for (int n = 2; n <= 8; ++n) CHECK(s0(n) < 1.0 / (2.0 * n));
  const Thresholds t = thresholds(3);
  CHECK(t.s0 == doctest::Approx(0.1069).epsilon(1e-3));
  CHECK(t.p_upper_s1 == Q("28/25"));
}

TEST_CASE("critical exponents") {
  const CriticalExponents c = critical_exponents(3, Q("2"), Q("3/2"));
  CHECK(c.s_sch == Q("1/2"));
  CHECK(c.s_w == c.s_sch);
  CHECK(c.s_c == Q("3/4"));
  CHECK_THROWS_AS(critical_exponents(3, Rational(0)), Error);
}

TEST_CASE("wave pair selection satisfies every relation") {
  for (auto [n, s] : {std::pair{2, "3/10"}, {2, "6/25"}, {3, "3/20"}, {3, "1/5"}, {4, "1/5"}, {4, "1/10"}}) {
    CAPTURE(n);
    CAPTURE(s);
    const PairChoice c = choose_pairs_nlw(n, Q(s));
    CHECK(verify_nlw_pairs(n, Q(s), c).all());
  }
  CHECK_THROWS_AS(choose_pairs_nlw(5, Q("1/20")), Error);
}

TEST_CASE("Schrodinger pair selection satisfies every relation") {
  for (auto [s, sc] : {std::pair{"-1/10", "-1/10"}, {"-1/20", "-3/20"}, {"-1/5", "-1/5"}, {"-1/100", "-1/5"}}) {
    CAPTURE(s);
    const PairChoice c = choose_pairs_nls(2, Q(s), Q(sc));
    CHECK(verify_nls_pairs(2, Q(s), Q(sc), c).all());
  }
}

TEST_CASE("Klein-Gordon and beam rates") {
  CHECK(kg_beam_constants(LinearFamily::klein_gordon, 2, E("10/3"), 1) == Q("3/10"));
  CHECK(kg_beam_constants(LinearFamily::klein_gordon, 2, E("6"), 1) == Q("1/2"));
  CHECK(kg_beam_constants(LinearFamily::beam, 2, E("4"), -1) == Q("-1/2"));
}

TEST_CASE("region table covers the lattice") {
  const auto rows = region_table(PairFamily::radial_schrodinger, 2, 10);
  CHECK(rows.size() == 121);
  CHECK(pair_family_by_name("wave") == PairFamily::radial_wave);
  CHECK_THROWS_AS(pair_family_by_name("heat"), Error);
}
