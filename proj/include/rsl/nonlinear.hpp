#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsl/admissibility.hpp"
#include "rsl/propagator.hpp"

namespace rsl {

enum class EquationKind { nls, nlw, fnls };
const char* to_string(EquationKind kind);
EquationKind equation_kind_by_name(const std::string& name);

// i u_t + Delta u = mu |u|^p u (nls), u_tt - Delta u = mu |u|^p u (nlw),
// i u_t + (-Delta)^{sigma/2} u = mu |u|^p u (fnls).
//
// All three are advanced with S(t) = e^{it phi}. For nls that propagator runs
// the conjugate equation, so the computed field is conj(u) and mu enters the
// scheme with the opposite sign.
struct NonlinearProblem {
  EquationKind kind = EquationKind::nls;
  int n = 2;
  double p = 1.0;
  int mu = 1;
  double sigma = 2.0;  // fnls order
  double s = 0.0;      // regularity the data are measured in
  RadialProfile u0;
  std::optional<RadialProfile> u1;  // nlw velocity
  double coupling = 1.0;            // scales the nonlinear term; 0 gives the linear flow

  DispersionSymbol symbol() const;
  // Signed coefficient of -i int e^{i(t-tau) phi} N^ in the scheme.
  double scheme_mu() const;
  // Data band, the union of the supports of u0 and u1.
  double band_lo() const;
  double band_hi() const;
  void validate() const;
};

// Uniform time steps on [0, T]; Gauss panels in r on [0, R] and in the
// frequency on (0, s_max].
struct SolverGrid {
  double T = 16.0;
  double dt = 0.0;
  double R = 0.0;
  double r_panel = 0.0;
  double s_max = 0.0;
  double s_panel = 0.0;
  int order = 4;

  std::size_t steps() const;
};

// Grid for the problem: s_max = (p+1) times the data band, r panels resolving
// s_max, R covering the data plus the farthest group-velocity travel, and a
// phase per time step of at most step_phase (pi/8) at s_max.
SolverGrid default_solver_grid(const NonlinearProblem& problem, double T,
                               const QuadraturePolicy& policy = {},
                               double step_phase = 0.39269908169872414);
// Throws QuadratureUnderresolved when the grid cannot carry the problem.
void check_resolution(const NonlinearProblem& problem, const SolverGrid& grid,
                      const QuadraturePolicy& policy = {});

struct PicardTrace {
  std::vector<double> iterate_norms;
  std::vector<double> diff_norms;
  double contraction_factor = 0.0;
  bool converged = false;
  int iterations = 0;  // index of the first difference below tolerance
  double q = 2.0, r = 2.0;
};

struct NonlinearSolution {
  SpaceTimeField field;  // physical u on the space-time grid
  SpaceTimeField linear;
  EquationKind kind = EquationKind::nls;
  DispersionSymbol symbol;
  std::vector<double> sigma;
  std::vector<double> sigma_weights;
  // e^{-it phi} of the frequency-side state, t-major. For nlw the state is
  // u^ - i u_t^ / sigma.
  std::vector<Complex> pullback;

  std::size_t nt() const { return field.grid.nt(); }
  std::size_t ns() const { return sigma.size(); }
  double sobolev(const std::vector<Complex>& h, double s) const;
};

struct PicardResult {
  NonlinearSolution solution;
  PicardTrace trace;
};

// u^{m+1} = linear + Duhamel(|u^m|^p u^m). Stops once the difference in the
// L^q_t L^r_x norm of the pair is at most tol times the iterate norm.
PicardResult picard_solve(const NonlinearProblem& problem, const PairChoice& pairs,
                          const SolverGrid& grid, const QuadraturePolicy& policy = {},
                          int max_iter = 30, double tol = 1e-10);

struct ScatteringDiagnostic {
  std::vector<double> times;
  std::vector<double> deviation;
  std::vector<Complex> u_plus;  // on the solution's frequency nodes
  double u_plus_norm = 0.0;
  double data_norm = 0.0;
  double shift = 0.0;  // |u_plus - u0^| in the same norm
  bool non_increasing = false;
};

// Deviation |v(t) - v(T)| in H^s on the last tail_fraction of the window,
// with v the pullback.
ScatteringDiagnostic scattering_state(const NonlinearSolution& solution, double s,
                                      double tail_fraction = 0.5, double rel_tol = 1e-9);

struct ConservationSeries {
  std::vector<double> times;
  std::vector<double> mass;  // empty for nlw
  std::vector<double> energy;
  double mass_drift = 0.0;  // max relative change from t = 0
  double energy_drift = 0.0;
};

ConservationSeries conservation(const NonlinearSolution& solution, const NonlinearProblem& problem);

// Band-limited random radial datum on [2^k_min, 2^k_max] with |h|_{H^s} = norm.
RadialProfile random_radial_datum(int n, double s, double norm, int k_min, int k_max,
                                  std::uint64_t seed, bool complex_valued);

// q = q~ = p + 2 and r = r~ = 2n(p+2) / (2(n - sigma) + np).
PairChoice fnls_pairs(int n, const Rational& sigma, const Rational& p);

struct ExperimentSettings {
  double T = 16.0;
  int k_min = -1;
  int k_max = 0;
  int mu = 1;
  int max_iter = 30;
  double tol = 1e-10;
  double step_phase = 0.39269908169872414;
  QuadraturePolicy policy;
};

struct RunRecord {
  std::uint64_t seed = 0;
  PicardTrace trace;
  ScatteringDiagnostic scattering;
  ConservationSeries conservation;
  double data_norm = 0.0;
  double solution_norm = 0.0;  // the a priori bound norm
  double bound_constant = 0.0;
  double seconds = 0.0;
};

struct ExperimentReport {
  EquationKind kind = EquationKind::nls;
  int n = 2;
  double p = 0.0, s = 0.0, sigma = 2.0, delta = 0.0;
  int mu = 1;
  PairChoice pairs;
  double bound_q = 2.0, bound_r = 2.0;
  SolverGrid grid;
  double band_lo = 0.0, band_hi = 0.0;
  std::vector<RunRecord> runs;

  bool all_converged() const;
  double max_contraction() const;
  // Largest tail deviation over the data norm.
  double max_relative_deviation() const;
  bool deviations_non_increasing() const;
  double max_mass_drift() const;
  double max_energy_drift() const;
  // max / min of the bound constants across runs.
  double bound_spread() const;
};

ExperimentReport nls_small_data_experiment(int n, double s_sch, double delta,
                                           const std::vector<std::uint64_t>& seeds,
                                           const ExperimentSettings& settings = {});
ExperimentReport nlw_small_data_experiment(int n, double s_w, double delta,
                                           const std::vector<std::uint64_t>& seeds,
                                           const ExperimentSettings& settings = {});
ExperimentReport fnls_experiment(int n, double sigma, double p, double s, double delta,
                                 const std::vector<std::uint64_t>& seeds,
                                 const ExperimentSettings& settings = {});

}  // namespace rsl
