#include <doctest.h>

#include <cmath>

#include "rsl/error.hpp"
#include "rsl/nonlinear.hpp"
#include "rsl/norms.hpp"

using namespace rsl;

namespace {

NonlinearProblem small_nls(double delta, double coupling) {
  NonlinearProblem p;
  p.kind = EquationKind::nls;
  p.n = 2;
  p.s = -0.1;
  p.p = 2.0 / (1.0 - p.s);
  p.u0 = random_radial_datum(2, p.s, delta, -1, 0, 3, true);
  p.coupling = coupling;
  return p;
}

}  // namespace

TEST_CASE("equation names") {
  CHECK(equation_kind_by_name("nlw") == EquationKind::nlw);
  CHECK(std::string(to_string(EquationKind::fnls)) == "fnls");
  CHECK_THROWS_AS(equation_kind_by_name("kdv"), Error);
}

TEST_CASE("random data have the requested norm and band") {
  const RadialProfile h = random_radial_datum(2, -0.1, 0.25, -1, 0, 9, true);
  CHECK(sobolev_norm(h, -0.1) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(h.support_lo == doctest::Approx(0.5));
  CHECK(h.support_hi == doctest::Approx(1.0));
  const RadialProfile g = random_radial_datum(2, -0.1, 0.25, -1, 0, 9, true);
  for (std::size_t i = 0; i < h.values.size(); ++i) CHECK(h.values[i] == g.values[i]);
}

TEST_CASE("fractional pairs") {
  const PairChoice c = fnls_pairs(2, parse_rational("3/2"), parse_rational("3/2"));
  CHECK(c.q == Exponent::parse("7/2"));
  CHECK(c.r == Exponent::parse("7/2"));
  CHECK(c.q_dual == c.q.conjugate());
}

TEST_CASE("problem validation") {
  NonlinearProblem p = small_nls(1e-3, 1.0);
  p.kind = EquationKind::fnls;
  p.sigma = 2.5;
  CHECK_THROWS_AS(p.validate(), Error);
  try {
    p.validate();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRangeSigma);
  }
  CHECK_THROWS_AS(nls_small_data_experiment(2, 0.1, 1e-3, {1}), Error);
  CHECK_THROWS_AS(fnls_experiment(2, 1.2, 1.5, 0.0, 1e-3, {1}), Error);
}

TEST_CASE("zero coupling reproduces the free flow") {
  const NonlinearProblem p = small_nls(1e-2, 0.0);
  const SolverGrid g = default_solver_grid(p, 2.0);
  const PicardResult r = picard_solve(p, choose_pairs_nls(2, parse_rational("-1/10"), parse_rational("-1/10")), g);
  CHECK(r.trace.converged);
  for (std::size_t i = 0; i < r.solution.field.values.size(); ++i)
    CHECK(r.solution.field.values[i] == r.solution.linear.values[i]);
}

TEST_CASE("small data Schrodinger run contracts and conserves mass") {
  const NonlinearProblem p = small_nls(0.1, 1.0);
  const SolverGrid g = default_solver_grid(p, 4.0);
  CHECK_NOTHROW(check_resolution(p, g));
  const PicardResult r = picard_solve(p, choose_pairs_nls(2, parse_rational("-1/10"), parse_rational("-1/10")), g);
  CHECK(r.trace.converged);
  CHECK(r.trace.contraction_factor < 0.5);
  const ConservationSeries c = conservation(r.solution, p);
  CHECK(c.mass_drift < 1e-6);
  CHECK(c.energy_drift < 1e-2);
  const ScatteringDiagnostic d = scattering_state(r.solution, p.s);
  CHECK(d.non_increasing);
  CHECK(d.shift < d.data_norm);
}

TEST_CASE("coarse grids are rejected") {
  const NonlinearProblem p = small_nls(0.1, 1.0);
  SolverGrid g = default_solver_grid(p, 2.0);
  g.r_panel *= 20.0;
  CHECK_THROWS_AS(check_resolution(p, g), Error);
}
