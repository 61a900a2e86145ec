#include "rsl/nonlinear.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "rsl/error.hpp"
#include "rsl/norms.hpp"
#include "rsl/parallel.hpp"
#include "rsl/special_functions.hpp"

namespace rsl {

const char* to_string(EquationKind kind) {
  switch (kind) {
    case EquationKind::nls: return "nls";
    case EquationKind::nlw: return "nlw";
    case EquationKind::fnls: return "fnls";
  }
  return "unknown";
}

EquationKind equation_kind_by_name(const std::string& name) {
  if (name == "nls") return EquationKind::nls;
  if (name == "nlw") return EquationKind::nlw;
  if (name == "fnls") return EquationKind::fnls;
  throw Error(ErrorKind::ConfigError, "unknown equation '" + name + "'");
}

DispersionSymbol NonlinearProblem::symbol() const {
  switch (kind) {
    case EquationKind::nls: return schrodinger_symbol();
    case EquationKind::nlw: return wave_symbol();
    case EquationKind::fnls: return fractional_symbol(sigma);
  }
  return schrodinger_symbol();
}

double NonlinearProblem::scheme_mu() const {
  const double m = coupling * mu;
  return kind == EquationKind::nls ? -m : m;
}

double NonlinearProblem::band_lo() const {
  return u1 ? std::min(u0.support_lo, u1->support_lo) : u0.support_lo;
}

double NonlinearProblem::band_hi() const {
  return u1 ? std::max(u0.support_hi, u1->support_hi) : u0.support_hi;
}

void NonlinearProblem::validate() const {
  if (n < 2) throw Error(ErrorKind::DomainError, "dimension must be at least 2");
  if (!(p > 0.0)) throw Error(ErrorKind::DomainError, "nonlinearity power must be positive");
  if (mu != 1 && mu != -1) throw Error(ErrorKind::DomainError, "mu must be +1 or -1");
  if (kind == EquationKind::fnls && !(sigma > 1.0 && sigma < 2.0))
    throw Error(ErrorKind::OutOfRangeSigma, "fractional order must lie in (1, 2)");
  if (u0.n != n || (u1 && u1->n != n)) throw Error(ErrorKind::DomainError, "data dimension mismatch");
  if (kind == EquationKind::nlw && !u1) throw Error(ErrorKind::DomainError, "wave problem needs u1");
  if (kind != EquationKind::nlw && u1) throw Error(ErrorKind::DomainError, "u1 is only used by the wave problem");
  if (!(band_lo() > 0.0) || !(band_hi() > band_lo()))
    throw Error(ErrorKind::DomainError, "data must be band limited away from zero");
}

std::size_t SolverGrid::steps() const {
  return static_cast<std::size_t>(std::llround(T / dt));
}

namespace {

constexpr double kStepPhase = std::numbers::pi / 8.0;

double max_slope(const DispersionSymbol& symbol, double hi) {
  double m = 0.0;
  for (int i = 1; i <= 256; ++i) m = std::max(m, std::abs(symbol.dphi(hi * i / 256.0)));
  return m;
}

// Last radius where the data are above 1e-6 of their peak.
double data_extent(const NonlinearProblem& problem, const QuadraturePolicy& policy) {
  const double width = problem.band_hi() - problem.band_lo();
  const double scan = 200.0 / width;
  const int samples = 800;
  std::vector<double> mag(samples + 1, 0.0);
  parallel_for(samples + 1, [&](std::size_t i) {
    const double r = scan * i / samples;
    double m = std::abs(fourier_bessel(problem.u0, r, policy));
    if (problem.u1) m = std::max(m, std::abs(fourier_bessel(*problem.u1, r, policy)));
    mag[i] = m;
  });
  const double peak = *std::max_element(mag.begin(), mag.end());
  int last = 0;
  for (int i = 0; i <= samples; ++i)
    if (mag[i] > 1e-6 * peak) last = i;
  return scan * std::min(samples, last + 1) / samples;
}

// The state the linear flow acts on: u0, or u0 - i u1 / s for the wave.
RadialProfile initial_state(const NonlinearProblem& problem) {
  if (problem.kind != EquationKind::nlw) return problem.u0;
  const RadialProfile& a = problem.u0;
  const RadialProfile& b = *problem.u1;
  const double lo = problem.band_lo(), hi = problem.band_hi();
  FrequencyGrid grid = FrequencyGrid::gauss_panels(lo, hi, 64, 8);
  auto in = [](const RadialProfile& h, double s) {
    return s >= h.support_lo && s <= h.support_hi ? h.value_at(s) : Complex{};
  };
  return make_profile(problem.n, std::move(grid),
                      [a, b, in](double s) { return in(a, s) - Complex(0.0, 1.0) * in(b, s) / s; }, lo, hi);
}

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Real GEMM applied to complex rows, in deterministic row blocks.
void apply_rows(const RowMajor& re_in, const RowMajor& im_in, const Eigen::MatrixXd& op, RowMajor& re_out,
                RowMajor& im_out, bool imag_needed) {
  const Eigen::Index rows = re_in.rows();
  re_out.resize(rows, op.cols());
  im_out.resize(rows, op.cols());
  constexpr Eigen::Index kRows = 64;
  const std::size_t blocks = static_cast<std::size_t>((rows + kRows - 1) / kRows);
  parallel_for(blocks, [&](std::size_t b) {
    const Eigen::Index r0 = static_cast<Eigen::Index>(b) * kRows;
    const Eigen::Index len = std::min(kRows, rows - r0);
    re_out.middleRows(r0, len).noalias() = re_in.middleRows(r0, len) * op;
    if (imag_needed)
      im_out.middleRows(r0, len).noalias() = im_in.middleRows(r0, len) * op;
    else
      im_out.middleRows(r0, len).setZero();
  });
}

double power_integral(const SpaceTimeField& field, std::size_t i, double exponent) {
  double sum = 0.0;
  const PhysicalGrid& g = field.grid;
  for (std::size_t j = 0; j < g.nr(); ++j)
    sum += std::pow(std::abs(field.at(i, j)), exponent) * std::pow(g.r[j], field.n - 1) * g.r_weights[j];
  return sphere_area(field.n) * sum;
}

double pair_value(const Exponent& e) { return e.is_infinite() ? kInf : e.to_double(); }

}  // namespace

SolverGrid default_solver_grid(const NonlinearProblem& problem, double T, const QuadraturePolicy& policy,
                               double step_phase) {
  problem.validate();
  policy.validate();
  if (!(T > 0.0)) throw Error(ErrorKind::DomainError, "time window must be positive");
  if (!(step_phase > 0.0 && step_phase <= kStepPhase))
    throw Error(ErrorKind::DomainError, "step phase must lie in (0, pi/8]");
  const DispersionSymbol symbol = problem.symbol();
  SolverGrid g;
  g.T = T;
  g.order = policy.panel_order;
  g.s_max = (problem.p + 1.0) * problem.band_hi();
  g.r_panel = policy.max_phase_step / g.s_max;
  const double travel = T * max_slope(symbol, problem.band_hi());
  g.R = data_extent(problem, policy) + travel;
  g.R = g.r_panel * std::ceil(g.R / g.r_panel);
  const std::size_t steps = static_cast<std::size_t>(std::ceil(T * symbol.phi(g.s_max) / step_phase));
  g.dt = T / static_cast<double>(std::max<std::size_t>(steps, 1));
  g.s_panel = policy.max_phase_step / (g.R + T * max_slope(symbol, g.s_max));
  return g;
}

void check_resolution(const NonlinearProblem& problem, const SolverGrid& grid, const QuadraturePolicy& policy) {
  const DispersionSymbol symbol = problem.symbol();
  const double slack = 1.0 + 1e-9;
  auto fail = [](const std::string& what) { throw Error(ErrorKind::QuadratureUnderresolved, what); };
  if (!(grid.T > 0.0) || !(grid.dt > 0.0) || !(grid.R > 0.0) || !(grid.r_panel > 0.0) || !(grid.s_panel > 0.0))
    throw Error(ErrorKind::DomainError, "solver grid has non-positive entries");
  if (std::abs(grid.steps() * grid.dt - grid.T) > 1e-9 * grid.T) fail("time step does not divide the window");
  if (grid.s_max < (problem.p + 1.0) * problem.band_hi() / slack)
    fail("frequency range below p+1 times the data band");
  if (grid.r_panel * grid.s_max > policy.max_phase_step * slack)
    fail("r panels too wide for the nonlinearity band");
  if (grid.dt * symbol.phi(grid.s_max) > kStepPhase * slack) fail("time step exceeds pi/8 of phase at the top band");
  if (grid.s_panel * (grid.R + grid.T * max_slope(symbol, grid.s_max)) > policy.max_phase_step * slack)
    fail("frequency panels too wide for the window");
}

double NonlinearSolution::sobolev(const std::vector<Complex>& h, double s) const {
  double sum = 0.0;
  for (std::size_t l = 0; l < sigma.size(); ++l)
    sum += std::norm(h[l]) * std::pow(sigma[l], 2.0 * s + field.n - 1) * sigma_weights[l];
  return std::sqrt(sphere_area(field.n) * sum);
}

PicardResult picard_solve(const NonlinearProblem& problem, const PairChoice& pairs, const SolverGrid& grid,
                          const QuadraturePolicy& policy, int max_iter, double tol) {
  problem.validate();
  policy.validate();
  check_resolution(problem, grid, policy);
  if (max_iter < 1) throw Error(ErrorKind::DomainError, "max_iter must be positive");
  const int n = problem.n;
  const bool wave = problem.kind == EquationKind::nlw;
  const DispersionSymbol symbol = problem.symbol();

  const std::size_t nt = grid.steps() + 1;
  NodeSet t_nodes;
  for (std::size_t i = 0; i < nt; ++i) {
    t_nodes.x.push_back(grid.dt * static_cast<double>(i));
    t_nodes.w.push_back(i == 0 || i + 1 == nt ? 0.5 * grid.dt : grid.dt);
  }
  const NodeSet r_nodes = radial_nodes(0.0, grid.R, grid.r_panel, grid.order);
  const NodeSet s_nodes = composite_gauss_with_breaks(0.0, grid.s_max, grid.s_panel, grid.order, {});
  const PhysicalGrid pg = make_physical_grid(t_nodes, 0.0, grid.T, r_nodes, 0.0, grid.R);
  const std::size_t nr = pg.nr(), ns = s_nodes.size();

  PicardResult out;
  NonlinearSolution& sol = out.solution;
  PicardTrace& trace = out.trace;
  sol.kind = problem.kind;
  sol.symbol = symbol;
  sol.sigma = s_nodes.x;
  sol.sigma_weights = s_nodes.w;
  trace.q = pair_value(pairs.q);
  trace.r = pair_value(pairs.r);
  const MixedNormSpec norm_spec{trace.q, trace.r, std::nullopt, RadialRegion::everywhere()};

  const RadialProfile state0 = initial_state(problem);
  sol.linear = evolve(symbol, state0, pg, policy);
  if (wave)
    for (auto& v : sol.linear.values) v = Complex(v.real(), 0.0);

  std::vector<Complex> z0(ns);
  for (std::size_t l = 0; l < ns; ++l) {
    const double s = s_nodes.x[l];
    z0[l] = s >= state0.support_lo && s <= state0.support_hi ? state0.value_at(s) : Complex{};
  }
  std::vector<double> kappa(ns);
  const double mu = problem.scheme_mu();
  for (std::size_t l = 0; l < ns; ++l) kappa[l] = wave ? mu / s_nodes.x[l] : mu;
  sol.pullback.resize(nt * ns);
  for (std::size_t i = 0; i < nt; ++i) std::copy(z0.begin(), z0.end(), sol.pullback.begin() + i * ns);

  sol.field = sol.linear;
  if (problem.coupling == 0.0) {
    trace.iterate_norms.push_back(mixed_norm(sol.field, norm_spec));
    trace.converged = true;
    return out;
  }

  // forward[l, j] = s^{n-1} w K(s r); backward[j, l] = r^{n-1} w K(s r)
  Eigen::MatrixXd forward(ns, nr), backward(nr, ns);
  parallel_for(nr, [&](std::size_t j) {
    const double r = pg.r[j];
    const double rw = std::pow(r, n - 1) * pg.r_weights[j];
    for (std::size_t l = 0; l < ns; ++l) {
      const double k = radial_kernel(n, s_nodes.x[l] * r);
      forward(l, j) = std::pow(s_nodes.x[l], n - 1) * s_nodes.w[l] * k;
      backward(j, l) = rw * k;
    }
  });
  std::vector<std::pair<Complex, Complex>> step_weights(ns);
  std::vector<double> omega(ns);
  for (std::size_t l = 0; l < ns; ++l) {
    omega[l] = symbol.phi(s_nodes.x[l]);
    step_weights[l] = exponential_step_weights(omega[l], grid.dt);
  }

  RowMajor n_re(nt, nr), n_im(nt, nr), nh_re, nh_im, z_re(nt, ns), z_im(nt, ns), u_re, u_im;
  std::vector<Complex> integral(nt * ns);
  int rising = 0;
  for (int m = 0; m < max_iter; ++m) {
    parallel_for(nt, [&](std::size_t i) {
      for (std::size_t j = 0; j < nr; ++j) {
        const Complex u = sol.field.at(i, j);
        const Complex v = std::pow(std::abs(u), problem.p) * u;
        n_re(i, j) = v.real();
        n_im(i, j) = v.imag();
      }
    });
    apply_rows(n_re, n_im, backward, nh_re, nh_im, !wave);
    parallel_for(ns, [&](std::size_t l) {
      const auto [w0, w1] = step_weights[l];
      Complex acc{};
      integral[l] = acc;
      for (std::size_t i = 0; i + 1 < nt; ++i) {
        const Complex f0(nh_re(i, l), nh_im(i, l)), f1(nh_re(i + 1, l), nh_im(i + 1, l));
        acc += Complex(0.0, -1.0) * std::polar(1.0, -pg.t[i] * omega[l]) * (w0 * f0 + w1 * f1);
        integral[(i + 1) * ns + l] = acc;
      }
      for (std::size_t i = 0; i < nt; ++i) {
        const Complex z = kappa[l] * std::polar(1.0, pg.t[i] * omega[l]) * integral[i * ns + l];
        z_re(i, l) = z.real();
        z_im(i, l) = z.imag();
      }
    });
    apply_rows(z_re, z_im, forward, u_re, u_im, !wave);

    SpaceTimeField next = sol.linear;
    SpaceTimeField diff = sol.linear;
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t j = 0; j < nr; ++j) {
        next.at(i, j) += Complex(u_re(i, j), u_im(i, j));
        diff.at(i, j) = next.at(i, j) - sol.field.at(i, j);
      }
    next.source = FieldSource::direct;
    const double d = mixed_norm(diff, norm_spec);
    const double size = mixed_norm(next, norm_spec);
    if (!std::isfinite(d) || !std::isfinite(size))
      throw Error(ErrorKind::NonContraction, "iterate is not finite at step " + std::to_string(m));
    trace.diff_norms.push_back(d);
    trace.iterate_norms.push_back(size);
    sol.field = std::move(next);
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t l = 0; l < ns; ++l) sol.pullback[i * ns + l] = z0[l] + kappa[l] * integral[i * ns + l];

    const std::size_t k = trace.diff_norms.size();
    if (k >= 2 && trace.diff_norms[k - 2] > 0.0) {
      const double ratio = trace.diff_norms[k - 1] / trace.diff_norms[k - 2];
      trace.contraction_factor = std::max(trace.contraction_factor, ratio);
      rising = ratio >= 1.0 ? rising + 1 : 0;
      if (rising >= 3)
        throw Error(ErrorKind::NonContraction,
                    "difference grew for 3 consecutive steps (factor " + std::to_string(ratio) + ")");
    }
    if (d <= tol * size) {
      trace.converged = true;
      trace.iterations = m;
      break;
    }
  }
  return out;
}

ScatteringDiagnostic scattering_state(const NonlinearSolution& solution, double s, double tail_fraction,
                                      double rel_tol) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) throw Error(ErrorKind::DomainError, "tail fraction must lie in (0, 1]");
  ScatteringDiagnostic d;
  const std::size_t nt = solution.nt(), ns = solution.ns();
  if (nt == 0) return d;
  d.u_plus.assign(solution.pullback.end() - static_cast<std::ptrdiff_t>(ns), solution.pullback.end());
  d.u_plus_norm = solution.sobolev(d.u_plus, s);
  const std::vector<Complex> initial(solution.pullback.begin(), solution.pullback.begin() + static_cast<std::ptrdiff_t>(ns));
  d.data_norm = solution.sobolev(initial, s);
  std::vector<Complex> gap(ns);
  for (std::size_t l = 0; l < ns; ++l) gap[l] = d.u_plus[l] - initial[l];
  d.shift = solution.sobolev(gap, s);
  const std::size_t first = static_cast<std::size_t>(std::floor((1.0 - tail_fraction) * (nt - 1)));
  for (std::size_t i = first; i < nt; ++i) {
    for (std::size_t l = 0; l < ns; ++l) gap[l] = solution.pullback[i * ns + l] - d.u_plus[l];
    d.times.push_back(solution.field.grid.t[i]);
    d.deviation.push_back(solution.sobolev(gap, s));
  }
  d.non_increasing = true;
  const double slack = rel_tol * std::max(d.data_norm, d.deviation.front());
  for (std::size_t i = 1; i < d.deviation.size(); ++i)
    if (d.deviation[i] > d.deviation[i - 1] + slack) d.non_increasing = false;
  return d;
}

ConservationSeries conservation(const NonlinearSolution& solution, const NonlinearProblem& problem) {
  ConservationSeries c;
  const std::size_t nt = solution.nt(), ns = solution.ns();
  const bool wave = solution.kind == EquationKind::nlw;
  const double area = sphere_area(problem.n);
  const double mu = wave ? problem.coupling * problem.mu : problem.scheme_mu();
  c.times = solution.field.grid.t;
  c.energy.resize(nt);
  if (!wave) c.mass.resize(nt);
  parallel_for(nt, [&](std::size_t i) {
    double mass = 0.0, kinetic = 0.0;
    for (std::size_t l = 0; l < ns; ++l) {
      const double s = solution.sigma[l];
      const double w = std::norm(solution.pullback[i * ns + l]) * std::pow(s, problem.n - 1) * solution.sigma_weights[l];
      mass += w;
      kinetic += (wave ? s * s : solution.symbol.phi(s)) * w;
    }
    const double potential = power_integral(solution.field, i, problem.p + 2.0);
    c.energy[i] = 0.5 * area * kinetic - mu / (problem.p + 2.0) * potential;
    if (!wave) c.mass[i] = area * mass;
  });
  auto drift = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x - v.front()));
    return v.empty() || v.front() == 0.0 ? m : m / std::abs(v.front());
  };
  if (!c.mass.empty()) c.mass_drift = drift(c.mass);
  if (!c.energy.empty()) c.energy_drift = drift(c.energy);
  return c;
}

RadialProfile random_radial_datum(int n, double s, double norm, int k_min, int k_max, std::uint64_t seed,
                                  bool complex_valued) {
  if (k_max <= k_min) throw Error(ErrorKind::DomainError, "empty frequency band");
  if (!(norm >= 0.0)) throw Error(ErrorKind::DomainError, "norm must be nonnegative");
  const double lo = std::ldexp(1.0, k_min), hi = std::ldexp(1.0, k_max);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);
  constexpr int kModes = 4;
  std::vector<Complex> c(kModes);
  for (auto& v : c) v = complex_valued ? Complex(gauss(rng), gauss(rng)) : Complex(gauss(rng), 0.0);
  auto shape = [lo, hi, c](double x) {
    const double u = (x - lo) / (hi - lo);
    if (!(u > 0.0 && u < 1.0)) return Complex{};
    Complex sum{};
    for (int j = 0; j < kModes; ++j) sum += c[j] * std::cos(j * std::numbers::pi * u);
    return std::exp(4.0 - 1.0 / (u * (1.0 - u))) * sum;
  };
  FrequencyGrid grid = FrequencyGrid::gauss_panels(lo, hi, 64, 8);
  RadialProfile raw = make_profile(n, grid, shape, lo, hi, !complex_valued);
  const double current = sobolev_norm(raw, s);
  const double scale = current > 0.0 ? norm / current : 0.0;
  return make_profile(n, std::move(grid), [shape, scale](double x) { return scale * shape(x); }, lo, hi,
                      !complex_valued);
}

PairChoice fnls_pairs(int n, const Rational& sigma, const Rational& p) {
  PairChoice c;
  c.label = "fnls";
  c.p = p;
  c.q = Exponent::of(p + 2);
  c.r = Exponent::of(Rational(2 * n) * (p + 2) / (2 * (Rational(n) - sigma) + n * p));
  c.q_dual = c.q.conjugate();
  c.r_dual = c.r.conjugate();
  return c;
}

bool ExperimentReport::all_converged() const {
  return !runs.empty() && std::all_of(runs.begin(), runs.end(), [](const RunRecord& r) { return r.trace.converged; });
}

double ExperimentReport::max_contraction() const {
  double m = 0.0;
  for (const auto& r : runs) m = std::max(m, r.trace.contraction_factor);
  return m;
}

double ExperimentReport::max_relative_deviation() const {
  double m = 0.0;
  for (const auto& r : runs)
    for (double d : r.scattering.deviation) m = std::max(m, r.scattering.data_norm > 0.0 ? d / r.scattering.data_norm : d);
  return m;
}

bool ExperimentReport::deviations_non_increasing() const {
  return std::all_of(runs.begin(), runs.end(), [](const RunRecord& r) { return r.scattering.non_increasing; });
}

double ExperimentReport::max_mass_drift() const {
  double m = 0.0;
  for (const auto& r : runs) m = std::max(m, r.conservation.mass_drift);
  return m;
}

double ExperimentReport::max_energy_drift() const {
  double m = 0.0;
  for (const auto& r : runs) m = std::max(m, r.conservation.energy_drift);
  return m;
}

double ExperimentReport::bound_spread() const {
  double lo = kInf, hi = 0.0;
  for (const auto& r : runs) {
    lo = std::min(lo, r.bound_constant);
    hi = std::max(hi, r.bound_constant);
  }
  return runs.empty() || !(lo > 0.0) ? 0.0 : hi / lo;
}

namespace {

ExperimentReport run_experiment(ExperimentReport report, const std::vector<std::uint64_t>& seeds,
                                const ExperimentSettings& settings) {
  if (seeds.empty()) throw Error(ErrorKind::DomainError, "no seeds given");
  for (std::uint64_t seed : seeds) {
    const auto start = std::chrono::steady_clock::now();
    NonlinearProblem problem;
    problem.kind = report.kind;
    problem.n = report.n;
    problem.p = report.p;
    problem.mu = settings.mu;
    problem.sigma = report.sigma;
    problem.s = report.s;
    if (report.kind == EquationKind::nlw) {
      problem.u0 = random_radial_datum(report.n, report.s, 0.5 * report.delta, settings.k_min, settings.k_max, seed, false);
      problem.u1 = random_radial_datum(report.n, report.s - 1.0, 0.5 * report.delta, settings.k_min, settings.k_max,
                                       seed ^ 0x9e3779b97f4a7c15ULL, false);
    } else {
      problem.u0 = random_radial_datum(report.n, report.s, report.delta, settings.k_min, settings.k_max, seed, true);
    }
    if (report.runs.empty()) {
      report.grid = default_solver_grid(problem, settings.T, settings.policy, settings.step_phase);
      report.band_lo = problem.band_lo();
      report.band_hi = problem.band_hi();
    }
    PicardResult result = picard_solve(problem, report.pairs, report.grid, settings.policy, settings.max_iter, settings.tol);
    RunRecord run;
    run.seed = seed;
    run.trace = result.trace;
    run.scattering = scattering_state(result.solution, report.s);
    run.conservation = conservation(result.solution, problem);
    run.data_norm = run.scattering.data_norm;
    run.solution_norm = mixed_norm(result.solution.field, {report.bound_q, report.bound_r, std::nullopt, {}});
    run.bound_constant = run.data_norm > 0.0 ? run.solution_norm / run.data_norm : 0.0;
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.runs.push_back(std::move(run));
  }
  return report;
}

}  // namespace

ExperimentReport nls_small_data_experiment(int n, double s_sch, double delta, const std::vector<std::uint64_t>& seeds,
                                           const ExperimentSettings& settings) {
  if (n < 2) throw Error(ErrorKind::DomainError, "dimension must be at least 2");
  const double lower = (1.0 - n) / (2.0 * n + 1.0);
  if (!(s_sch >= lower - 1e-12 && s_sch < 0.0))
    throw Error(ErrorKind::OutOfRangeS, "s_sch must lie in [" + std::to_string(lower) + ", 0)");
  ExperimentReport report;
  report.kind = EquationKind::nls;
  report.n = n;
  report.s = s_sch;
  report.p = 2.0 / (0.5 * n - s_sch);
  report.delta = delta;
  report.mu = settings.mu;
  const Rational s = rational_from_double(s_sch);
  report.pairs = choose_pairs_nls(n, s, s);
  report.bound_q = report.bound_r = report.p * (n + 2) / 2.0;
  return run_experiment(std::move(report), seeds, settings);
}

ExperimentReport nlw_small_data_experiment(int n, double s_w, double delta, const std::vector<std::uint64_t>& seeds,
                                           const ExperimentSettings& settings) {
  if (n < 2) throw Error(ErrorKind::DomainError, "dimension must be at least 2");
  if (!(s_w > s0(n) && s_w < 0.5))
    throw Error(ErrorKind::OutOfRangeS, "s_w must lie in (" + std::to_string(s0(n)) + ", 1/2)");
  ExperimentReport report;
  report.kind = EquationKind::nlw;
  report.n = n;
  report.s = s_w;
  report.p = 2.0 / (0.5 * n - s_w);
  report.delta = delta;
  report.mu = settings.mu;
  report.pairs = choose_pairs_nlw(n, rational_from_double(s_w));
  report.bound_q = pair_value(report.pairs.q);
  report.bound_r = pair_value(report.pairs.r);
  return run_experiment(std::move(report), seeds, settings);
}

ExperimentReport fnls_experiment(int n, double sigma, double p, double s, double delta,
                                 const std::vector<std::uint64_t>& seeds, const ExperimentSettings& settings) {
  if (n < 2) throw Error(ErrorKind::DomainError, "dimension must be at least 2");
  const double lower = 2.0 * n / (2.0 * n - 1.0);
  if (!(sigma >= lower - 1e-12 && sigma < 2.0))
    throw Error(ErrorKind::OutOfRangeSigma, "sigma must lie in [" + std::to_string(lower) + ", 2)");
  if (!(p > 0.0)) throw Error(ErrorKind::DomainError, "nonlinearity power must be positive");
  ExperimentReport report;
  report.kind = EquationKind::fnls;
  report.n = n;
  report.s = s;
  report.p = p;
  report.sigma = sigma;
  report.delta = delta;
  report.mu = settings.mu;
  report.pairs = fnls_pairs(n, rational_from_double(sigma), rational_from_double(p));
  report.bound_q = pair_value(report.pairs.q);
  report.bound_r = pair_value(report.pairs.r);
  return run_experiment(std::move(report), seeds, settings);
}

}  // namespace rsl
