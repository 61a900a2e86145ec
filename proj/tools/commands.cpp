#include "commands.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "rsl/admissibility.hpp"
#include "rsl/error.hpp"
#include "rsl/estimates.hpp"
#include "rsl/nonlinear.hpp"
#include "rsl/norms.hpp"

namespace rsl::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    default: return "COMPLETE";
  }
}

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

Status verdict(bool pass) { return pass ? Status::pass : Status::fail; }

double exponent(const std::string& text) { return Exponent::parse(text).to_double(); }

std::vector<double> exponents(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(exponent(item));
  return out;
}

std::vector<double> powers_of_two(const IntRange& e, int sign) {
  std::vector<double> out;
  for (int x : e.values()) out.push_back(std::ldexp(1.0, sign * x));
  return out;
}

std::vector<double> as_doubles(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::vector<double> log2_of(const std::vector<double>& v) {
  std::vector<double> out;
  for (double x : v) out.push_back(std::log2(x));
  return out;
}

NormPolicy norm_policy(const RunConfig& c) {
  NormPolicy p;
  p.quadrature.max_phase_step = c.max_phase_step;
  p.quadrature.panel_order = c.panel_order;
  p.T0 = c.T0;
  p.R0 = c.R0;
  p.tol = c.tol;
  p.max_doublings = c.max_doublings;
  return p;
}

ExperimentSettings experiment_settings(const RunConfig& c) {
  ExperimentSettings s;
  s.T = c.T;
  s.k_min = c.band.lo;
  s.k_max = c.band.hi;
  s.mu = c.mu;
  s.max_iter = c.max_iter;
  s.tol = c.picard_tol;
  s.step_phase = c.step_phase;
  s.policy.max_phase_step = c.max_phase_step;
  s.policy.panel_order = c.panel_order;
  return s;
}

std::vector<std::uint64_t> seed_list(const RunConfig& c) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < c.seeds; ++i) out.push_back(c.seed + static_cast<std::uint64_t>(i));
  return out;
}

double window_scale(const DispersionSymbol& symbol, int k) { return std::exp2(-k * regime_exponents(symbol, k).m); }

Table single_series(const char* x_name, const char* y_name, const std::vector<double>& x, const std::vector<double>& y) {
  Table t({x_name, y_name});
  for (std::size_t i = 0; i < x.size(); ++i) t.add_row({x[i], y[i]});
  return t;
}

Outcome propagate(const RunConfig& c) {
  const DispersionSymbol sym = symbol_by_name(c.symbol);
  const NormPolicy policy = norm_policy(c);
  const int k = c.k0;
  const double T = c.T0 * window_scale(sym, k);
  const SpaceTimeField f = band_slab(sym, flat_band_profile(c.n, k), k, policy)(0.0, T);
  const SliceL2Report slices = slice_l2_check(sym, c.n, k, {-1.0, -0.5, 0.0, 0.5, 1.0}, policy);
  Outcome o;
  o.result = {{"k", k},
              {"T", T},
              {"samples", f.values.size()},
              {"data_norm", number(slices.data_norm)},
              {"slice_times", slices.times},
              {"slice_norms", slices.slice_norms},
              {"max_slice_deviation", number(slices.max_deviation)}};
  o.data = field_table(f);
  const std::size_t last = f.grid.nt() - 1;
  for (std::size_t j = 0; j < f.grid.nr(); ++j) {
    o.plot_x.push_back(f.grid.r[j]);
    o.plot_y.push_back(std::abs(f.at(last, j)));
  }
  o.status = verdict(slices.max_deviation <= 1e-4);
  return o;
}

Outcome split(const RunConfig& c) {
  const DispersionSymbol sym = symbol_by_name(c.symbol);
  const NormPolicy policy = norm_policy(c);
  const int k = c.k0;
  const double T = c.T0 * window_scale(sym, k);
  // s r >= 1 on the band needs r >= 2^{1-k}
  const double r_lo = std::ldexp(2.0, -k), r_hi = r_lo * c.R0;
  const NodeSet t = symmetric_time_nodes(0.0, T, T / 16.0, policy.order);
  const NodeSet r = radial_nodes(r_lo, r_hi, std::numbers::pi / std::ldexp(4.0, k), policy.order);
  const PhysicalGrid grid = make_physical_grid(t, -T, T, r, r_lo, r_hi);
  const RadialProfile h = flat_band_profile(c.n, k);
  const auto [main, error] = main_error_split(sym, h, k, grid, policy.quadrature);
  const SpaceTimeField full = evolve(sym, h, k, grid, policy.quadrature);
  double mismatch = 0.0, scale = 0.0;
  Outcome o;
  o.data = Table({"t", "r", "main_abs", "error_abs", "full_abs"});
  for (std::size_t i = 0; i < grid.nt(); ++i)
    for (std::size_t j = 0; j < grid.nr(); ++j) {
      mismatch = std::max(mismatch, std::abs(main.at(i, j) + error.at(i, j) - full.at(i, j)));
      scale = std::max(scale, std::abs(full.at(i, j)));
      o.data.add_row({grid.t[i], grid.r[j], std::abs(main.at(i, j)), std::abs(error.at(i, j)), std::abs(full.at(i, j))});
    }
  const double q = exponent(c.q);
  const MixedNormSpec spec{q, q, std::nullopt, {}};
  const double main_norm = mixed_norm(main, spec), error_norm = mixed_norm(error, spec);
  o.result = {{"k", k},
              {"r_range", {r_lo, r_hi}},
              {"T", T},
              {"q", q},
              {"main_norm", number(main_norm)},
              {"error_norm", number(error_norm)},
              {"relative_reassembly_error", number(mismatch / scale)}};
  const std::size_t mid = grid.nt() / 2;
  for (std::size_t j = 0; j < grid.nr(); ++j) {
    o.plot_x.push_back(grid.r[j]);
    o.plot_y.push_back(std::abs(error.at(mid, j)));
  }
  o.status = verdict(mismatch <= 1e-8 * scale);
  return o;
}

Outcome norm_sweep(const RunConfig& c) {
  const DispersionSymbol sym = symbol_by_name(c.symbol);
  const NormPolicy policy = norm_policy(c);
  const double q = exponent(c.q);
  Outcome o;
  o.data = Table({"k", "window", "norm"});
  Json per_k = Json::array();
  bool all = true;
  for (int k : c.k.values()) {
    const SlabGenerator slab = band_slab(sym, flat_band_profile(c.n, k), k, policy);
    const WindowResult w = adaptive_window(slab, {q, q, std::nullopt, {}}, c.T0 * window_scale(sym, k), c.tol,
                                           c.max_doublings, policy.extrapolate_tail);
    for (std::size_t i = 0; i < w.windows.size(); ++i) o.data.add_row({double(k), w.windows[i], w.norms[i]});
    per_k.push_back({{"k", k},
                     {"T", w.T},
                     {"norm", number(w.norm)},
                     {"measured", number(w.measured)},
                     {"tail_power", number(w.tail)},
                     {"converged", w.converged}});
    o.plot_x.push_back(k);
    o.plot_y.push_back(std::log2(w.norm));
    all = all && w.converged;
  }
  o.result = {{"q", q}, {"scales", per_k}};
  o.status = verdict(all);
  return o;
}

Outcome fit_k(const RunConfig& c) {
  const FrequencyScalingResult r =
      fit_frequency_scaling(symbol_by_name(c.symbol), c.n, exponent(c.q), c.k.values(), norm_policy(c));
  Outcome o;
  o.result = r;
  o.data = Table({"k", "norm", "window"});
  for (std::size_t i = 0; i < r.norms.size(); ++i) o.data.add_row({r.fit.indices[i], r.norms[i], r.windows[i]});
  o.plot_x = r.fit.indices;
  o.plot_y = r.fit.log_norms;
  o.status = verdict(r.verdict.pass);
  return o;
}

Outcome fit_j(const RunConfig& c) {
  const AnnulusRegime regime = c.regime == "inner"              ? AnnulusRegime::inner
                               : c.regime == "outer_dispersive" ? AnnulusRegime::outer_dispersive
                                                                : AnnulusRegime::outer_curvature;
  const AnnulusScalingResult r = fit_annulus_scaling(symbol_by_name(c.symbol), c.n, exponents(c.qs), c.k0,
                                                     c.j.values(), regime, norm_policy(c));
  Outcome o;
  o.result = r;
  std::vector<std::string> cols = {"j"};
  for (double q : r.qs) cols.push_back("norm_q" + format_number(q));
  o.data = Table(cols);
  for (std::size_t jj = 0; jj < r.js.size(); ++jj) {
    std::vector<double> row = {double(r.js[jj])};
    for (const auto& per_q : r.norms) row.push_back(per_q[jj]);
    o.data.add_row(row);
  }
  o.plot_x = r.fits.front().indices;
  o.plot_y = r.fits.front().log_norms;
  bool all = true;
  for (bool b : r.pass) all = all && b;
  o.status = verdict(all);
  return o;
}

Outcome bound_outcome(const BoundReport& r, const char* x_name) {
  Outcome o;
  o.result = r;
  o.data = single_series(x_name, "ratio", r.parameters, r.ratios);
  o.plot_x = r.parameters;
  o.plot_y = r.ratios;
  o.status = verdict(r.pass);
  return o;
}

Outcome smoothing(const RunConfig& c) {
  return bound_outcome(smoothing_check(symbol_by_name(c.symbol), c.k.values(), exponent(c.q), c.trials, c.seed), "k");
}

Outcome maximal(const RunConfig& c) {
  const MaximalResult r = maximal_check(c.a, c.k.values(), c.resolution);
  Outcome o;
  o.result = r;
  o.data = single_series("k", "norm", r.fit.indices, r.norms);
  o.plot_x = r.fit.indices;
  o.plot_y = r.fit.log_norms;
  o.status = verdict(r.pass);
  return o;
}

Outcome hls(const RunConfig& c) {
  const HlsParameters p = hls_parameters(c.n, exponent(c.q));
  Outcome o = bound_outcome(hls_bilinear_check(p, c.refinements), "level");
  o.result["parameters"] = {{"r", p.r}, {"s", p.s}, {"lambda", p.lambda}, {"alpha", p.alpha}, {"beta", p.beta}};
  return o;
}

Outcome growth_outcome(const GrowthReport& g, const char* x_name) {
  Outcome o;
  o.result = g;
  o.data = Table({x_name, "value", "relative_increment"});
  for (std::size_t i = 0; i < g.x.size(); ++i)
    o.data.add_row({g.x[i], g.values[i], i == 0 ? kNan : g.increments[i - 1]});
  o.plot_x = log2_of(g.x);
  o.plot_y = log2_of(g.values);
  o.status = verdict(g.pass);
  return o;
}

Outcome counter_wave(const RunConfig& c) {
  WaveCounterOptions opt;
  opt.tol = c.tol;
  return growth_outcome(counterexample_wave(c.n, exponent(c.q), powers_of_two(c.log2_R, 1), opt), "R");
}

Outcome counter_schrodinger(const RunConfig& c) {
  const SchrodingerCounterResult r = counterexample_schrodinger(c.n, exponent(c.q), c.j.values(), c.grid_points);
  Outcome o;
  o.result = r;
  o.data = single_series("j", "norm", r.fit.indices, r.norms);
  o.plot_x = r.fit.indices;
  o.plot_y = r.fit.log_norms;
  o.status = verdict(r.pass);
  return o;
}

Outcome knapp(const RunConfig& c) {
  return growth_outcome(
      knapp_fractional(to_double(parse_rational(c.sigma)), powers_of_two(c.log2_inv_delta, -1), exponent(c.q), exponent(c.r)),
      "delta");
}

Outcome l6(const RunConfig& c) {
  const L6Result r = strichartz_l6_check(symbol_by_name(c.symbol), c.k.values(), c.trials, c.seed);
  Outcome o;
  o.result = r;
  o.data = single_series("k", "norm", r.fit.indices, r.norms);
  o.plot_x = r.fit.indices;
  o.plot_y = r.fit.log_norms;
  o.status = verdict(r.pass);
  return o;
}

Outcome retarded(const RunConfig& c) {
  const RetardedResult r = retarded_strichartz_check(
      symbol_by_name(c.symbol), c.n, {exponent(c.q), exponent(c.r)}, {exponent(c.q_dual), exponent(c.r_dual)},
      to_double(parse_rational(c.gamma)), c.trials, c.seed, c.k.values());
  Outcome o;
  o.result = r;
  o.data = Table({"sample", "coarse_ratio", "fine_ratio"});
  for (std::size_t i = 0; i < r.coarse_ratios.size(); ++i) {
    o.data.add_row({double(i), r.coarse_ratios[i], r.fine_ratios[i]});
    o.plot_x.push_back(r.coarse_ratios[i]);
    o.plot_y.push_back(r.fine_ratios[i]);
  }
  o.status = verdict(r.report.pass);
  return o;
}

double verdict_code(Verdict v) { return v == Verdict::yes ? 1.0 : v == Verdict::no ? 0.0 : -1.0; }

Outcome admissible(const RunConfig& c) {
  const PairFamily family = pair_family_by_name(c.family);
  const AdmissibilityResult r = is_admissible(family, c.n, Exponent::parse(c.q), Exponent::parse(c.r));
  Outcome o;
  o.result = {{"family", rsl::to_string(family)}, {"q", c.q}, {"r", c.r}, {"admissibility", r}};
  o.data = Table({"inv_r", "inv_q", "verdict", "boundary"});
  for (const RegionRow& row : region_table(family, c.n, 40)) {
    o.data.add_row({row.inv_r, row.inv_q, verdict_code(row.verdict), row.boundary ? 1.0 : 0.0});
    if (row.boundary) {
      o.plot_x.push_back(row.inv_r);
      o.plot_y.push_back(row.inv_q);
    }
  }
  return o;
}

Outcome thresholds_cmd(const RunConfig& c) {
  Outcome o;
  const Thresholds t = thresholds(c.n);
  Json vertices = Json::array();
  for (const RegionVertex& v : region_vertices(c.n))
    vertices.push_back({{"name", v.name}, {"inv_r", rsl::to_string(v.inv_r)}, {"inv_q", rsl::to_string(v.inv_q)}});
  o.result = {{"thresholds", t}, {"vertices", vertices}};
  o.data = Table({"p", "s1", "s2"});
  for (int i = 1; i <= 80; ++i) {
    const Rational p(i, 20);
    o.data.add_row({to_double(p), to_double(s1(c.n, p)), to_double(s2(c.n, p))});
    o.plot_x.push_back(to_double(p));
    o.plot_y.push_back(to_double(s1(c.n, p)));
  }
  return o;
}

Outcome constants(const RunConfig& c) {
  const LinearFamily family = c.symbol == "beam" ? LinearFamily::beam : LinearFamily::klein_gordon;
  const Exponent q = Exponent::parse(c.q);
  Outcome o;
  Json rates = Json::array();
  o.data = Table({"k", "log2_rate"});
  for (int k : c.k.values()) {
    const Rational rate = kg_beam_constants(family, c.n, q, k);
    rates.push_back({{"k", k}, {"rate", rsl::to_string(rate)}});
    o.data.add_row({double(k), to_double(rate)});
    o.plot_x.push_back(k);
    o.plot_y.push_back(to_double(rate));
  }
  o.result = {{"family", c.symbol}, {"q", c.q}, {"rates", rates}};
  return o;
}

Outcome pairs(const RunConfig& c) {
  const Rational s = parse_rational(c.s);
  PairChoice choice;
  PairCheck check;
  if (c.family == "wave") {
    choice = choose_pairs_nlw(c.n, s);
    check = verify_nlw_pairs(c.n, s, choice);
  } else {
    const Rational sch = parse_rational(c.s_sch);
    choice = choose_pairs_nls(c.n, s, sch);
    check = verify_nls_pairs(c.n, s, sch, choice);
  }
  Outcome o;
  o.result = {{"pairs", choice}, {"check", check}};
  o.data = Table({"inv_q", "inv_r", "inv_q_dual", "inv_r_dual"});
  o.data.add_row({to_double(choice.q.reciprocal()), to_double(choice.r.reciprocal()),
                  to_double(choice.q_dual.reciprocal()), to_double(choice.r_dual.reciprocal())});
  o.plot_x = {to_double(choice.r.reciprocal()), to_double(choice.r_dual.reciprocal())};
  o.plot_y = {to_double(choice.q.reciprocal()), to_double(choice.q_dual.reciprocal())};
  o.status = verdict(check.all());
  return o;
}

Outcome experiment_outcome(const ExperimentReport& r) {
  Outcome o;
  o.result = r;
  o.data = Table({"seed", "iterations", "contraction", "relative_tail_deviation", "mass_drift", "energy_drift",
                  "bound_constant"});
  for (const RunRecord& run : r.runs) {
    const double dev = run.scattering.deviation.empty() ? kNan : run.scattering.deviation.front() / run.scattering.data_norm;
    o.data.add_row({double(run.seed), double(run.trace.iterations), run.trace.contraction_factor, dev,
                    r.kind == EquationKind::nlw ? kNan : run.conservation.mass_drift, run.conservation.energy_drift,
                    run.bound_constant});
  }
  if (!r.runs.empty()) {
    o.plot_x = r.runs.front().scattering.times;
    o.plot_y = r.runs.front().scattering.deviation;
  }
  o.status = verdict(r.all_converged());
  return o;
}

Outcome solve_nls(const RunConfig& c) {
  return experiment_outcome(
      nls_small_data_experiment(c.n, to_double(parse_rational(c.s)), c.delta, seed_list(c), experiment_settings(c)));
}

Outcome solve_nlw(const RunConfig& c) {
  return experiment_outcome(
      nlw_small_data_experiment(c.n, to_double(parse_rational(c.s)), c.delta, seed_list(c), experiment_settings(c)));
}

Outcome solve_fnls(const RunConfig& c) {
  const double sigma = to_double(parse_rational(c.sigma));
  // mass critical unless given
  const double p = c.p.empty() ? 2.0 * sigma / c.n : to_double(parse_rational(c.p));
  return experiment_outcome(
      fnls_experiment(c.n, sigma, p, to_double(parse_rational(c.s)), c.delta, seed_list(c), experiment_settings(c)));
}

Outcome probe(const RunConfig& c) {
  Outcome o = growth_outcome(
      conjecture_probe(symbol_by_name(c.symbol), c.n, powers_of_two(c.log2_R, 1), norm_policy(c)), "R");
  o.status = Status::complete;
  return o;
}

}  // namespace

Outcome run_command(const RunConfig& c) {
  static const std::map<std::string, std::function<Outcome(const RunConfig&)>> table = {
      {"propagate", propagate},
      {"split", split},
      {"norm-sweep", norm_sweep},
      {"fit-k", fit_k},
      {"fit-j", fit_j},
      {"smoothing", smoothing},
      {"maximal", maximal},
      {"hls", hls},
      {"counter-wave", counter_wave},
      {"counter-schrodinger", counter_schrodinger},
      {"knapp", knapp},
      {"l6", l6},
      {"retarded", retarded},
      {"admissible", admissible},
      {"thresholds", thresholds_cmd},
      {"constants", constants},
      {"pairs", pairs},
      {"solve-nls", solve_nls},
      {"solve-nlw", solve_nlw},
      {"solve-fnls", solve_fnls},
      {"conjecture-probe", probe},
  };
  const auto it = table.find(c.command);
  if (it == table.end()) throw Error(ErrorKind::ConfigError, "unknown command '" + c.command + "'");
  return it->second(c);
}

}  // namespace rsl::cli
