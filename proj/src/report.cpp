#include "rsl/report.hpp"

#include <cmath>

namespace rsl {

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

namespace {

Json numbers(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

Json optional_number(const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); }

}  // namespace

void to_json(Json& j, const QuadraturePolicy& p) {
  j = {{"max_phase_step", p.max_phase_step},
       {"panel_order", p.panel_order},
       {"refinement_limit", p.refinement_limit},
       {"base_panels_per_octave", p.base_panels_per_octave}};
}

void to_json(Json& j, const NormPolicy& p) {
  j = {{"quadrature", p.quadrature}, {"T0", p.T0},       {"R0", p.R0},
       {"tol", p.tol},               {"max_doublings", p.max_doublings},
       {"order", p.order},           {"t_panel_factor", p.t_panel_factor},
       {"r_panel_factor", p.r_panel_factor}, {"adaptive", p.adaptive},
       {"extrapolate_tail", p.extrapolate_tail}};
}

void to_json(Json& j, const ExponentFit& f) {
  j = {{"indices", numbers(f.indices)},
       {"log2_norms", numbers(f.log_norms)},
       {"slope", number(f.slope)},
       {"intercept", number(f.intercept)},
       {"max_residual", number(f.max_residual)},
       {"predicted_slope", number(f.predicted_slope)},
       {"unreliable", f.unreliable()}};
}

void to_json(Json& j, const SlopeVerdict& v) {
  j = {{"within_bound", v.within_bound}, {"exact", v.exact}, {"pass", v.pass}};
}

void to_json(Json& j, const OctaveRatios& o) {
  j = {{"k", o.k},
       {"slope_min", number(o.slope_min)},
       {"slope_max", number(o.slope_max)},
       {"curvature_min", optional_number(o.curvature_min)},
       {"curvature_max", optional_number(o.curvature_max)},
       {"pass", o.pass}};
}

void to_json(Json& j, const HypothesisReport& r) {
  j = {{"symbol", r.symbol},
       {"window", r.window},
       {"samples_per_octave", r.samples_per_octave},
       {"octaves", r.octaves},
       {"pass", r.pass}};
}

void to_json(Json& j, const BesselBoundReport& r) {
  j = {{"nu", r.nu},
       {"sup_small", number(r.sup_small)},
       {"sup_large", number(r.sup_large)},
       {"bound", r.bound},
       {"pass", r.pass}};
}

void to_json(Json& j, const FrequencyScalingResult& r) {
  j = {{"form", r.form == BoundForm::dispersive ? "dispersive" : "curvature"},
       {"fit", r.fit},
       {"norms", numbers(r.norms)},
       {"windows", numbers(r.windows)},
       {"converged", r.converged},
       {"verdict", r.verdict}};
}

void to_json(Json& j, const AnnulusScalingResult& r) {
  const char* regime = r.regime == AnnulusRegime::inner        ? "inner"
                       : r.regime == AnnulusRegime::outer_dispersive ? "outer_dispersive"
                                                               : "outer_curvature";
  Json norms = Json::array();
  for (const auto& row : r.norms) norms.push_back(numbers(row));
  j = {{"regime", regime},      {"qs", numbers(r.qs)},   {"js", r.js},    {"norms", norms},
       {"windows", numbers(r.windows)}, {"fits", r.fits}, {"pass", r.pass}};
}

void to_json(Json& j, const SliceL2Report& r) {
  j = {{"symbol", r.symbol},
       {"n", r.n},
       {"k", r.k},
       {"data_norm", number(r.data_norm)},
       {"times", numbers(r.times)},
       {"slice_norms", numbers(r.slice_norms)},
       {"max_deviation", number(r.max_deviation)}};
}

void to_json(Json& j, const BoundReport& r) {
  j = {{"quantity", r.quantity},
       {"parameters", numbers(r.parameters)},
       {"ratios", numbers(r.ratios)},
       {"max_ratio", number(r.max_ratio)},
       {"min_ratio", number(r.min_ratio)},
       {"bound", number(r.bound)},
       {"seed", r.seed},
       {"pass", r.pass}};
}

void to_json(Json& j, const MaximalResult& r) {
  j = {{"fit", r.fit}, {"norms", numbers(r.norms)}, {"predicted", r.predicted}, {"pass", r.pass}};
}

void to_json(Json& j, const GrowthReport& r) {
  j = {{"x", numbers(r.x)},
       {"values", numbers(r.values)},
       {"increments", numbers(r.increments)},
       {"fit", r.fit},
       {"monotone", r.monotone},
       {"saturated", r.saturated},
       {"min_ratio", number(r.min_ratio)},
       {"max_ratio", number(r.max_ratio)},
       {"pass", r.pass}};
}

void to_json(Json& j, const SchrodingerCounterResult& r) {
  j = {{"fit", r.fit}, {"norms", numbers(r.norms)}, {"predicted", r.predicted}, {"pass", r.pass}};
}

void to_json(Json& j, const L6Result& r) {
  j = {{"fit", r.fit}, {"norms", numbers(r.norms)}, {"pass", r.pass}};
}

void to_json(Json& j, const RetardedResult& r) {
  j = {{"report", r.report}, {"coarse_ratios", numbers(r.coarse_ratios)}, {"fine_ratios", numbers(r.fine_ratios)}};
}

void to_json(Json& j, const Exponent& e) { j = e.str(); }

void to_json(Json& j, const AdmissibilityResult& r) {
  j = {{"verdict", to_string(r.verdict)}, {"boundary", r.boundary}, {"flags", r.flags}};
}

void to_json(Json& j, const PairChoice& c) {
  j = {{"label", c.label}, {"p", to_string(c.p)},        {"q", c.q},
       {"r", c.r},         {"q_dual", c.q_dual},          {"r_dual", c.r_dual},
       {"theta", c.theta ? Json(to_string(*c.theta)) : Json(nullptr)}};
}

void to_json(Json& j, const PairCheck& c) {
  j = {{"admissible", c.admissible},
       {"gap", c.gap},
       {"dual_gap", c.dual_gap},
       {"power_relations", c.power_relations},
       {"all", c.all()}};
}

void to_json(Json& j, const CriticalExponents& c) {
  j = {{"n", c.n},
       {"p", to_string(c.p)},
       {"sigma", to_string(c.sigma)},
       {"s_sch", to_string(c.s_sch)},
       {"s_w", to_string(c.s_w)},
       {"s_c", to_string(c.s_c)}};
}

void to_json(Json& j, const Thresholds& t) {
  j = {{"n", t.n},
       {"s0", t.s0},
       {"one_over_2n", t.one_over_2n},
       {"s1_at_breakpoint", to_string(t.s1_at_breakpoint)},
       {"p_upper_s1", to_string(t.p_upper_s1)}};
}

void to_json(Json& j, const SolverGrid& g) {
  j = {{"T", g.T},           {"dt", g.dt},         {"steps", g.steps()},  {"R", g.R},
       {"r_panel", g.r_panel}, {"s_max", g.s_max}, {"s_panel", g.s_panel}, {"order", g.order}};
}

void to_json(Json& j, const PicardTrace& t) {
  j = {{"iterate_norms", numbers(t.iterate_norms)},
       {"diff_norms", numbers(t.diff_norms)},
       {"contraction_factor", number(t.contraction_factor)},
       {"converged", t.converged},
       {"iterations", t.iterations},
       {"q", number(t.q)},
       {"r", number(t.r)}};
}

void to_json(Json& j, const ScatteringDiagnostic& d) {
  j = {{"times", numbers(d.times)},
       {"deviation", numbers(d.deviation)},
       {"u_plus_norm", number(d.u_plus_norm)},
       {"data_norm", number(d.data_norm)},
       {"shift", number(d.shift)},
       {"non_increasing", d.non_increasing}};
}

void to_json(Json& j, const ConservationSeries& c) {
  j = {{"mass_drift", number(c.mass_drift)}, {"energy_drift", number(c.energy_drift)}};
}

void to_json(Json& j, const RunRecord& r) {
  Json scattering = r.scattering;
  scattering.erase("times");
  scattering.erase("deviation");
  scattering["final_tail_deviation"] = r.scattering.deviation.empty() ? Json(nullptr) : number(r.scattering.deviation.front());
  j = {{"seed", r.seed},
       {"trace", r.trace},
       {"scattering", scattering},
       {"conservation", r.conservation},
       {"data_norm", number(r.data_norm)},
       {"solution_norm", number(r.solution_norm)},
       {"bound_constant", number(r.bound_constant)},
       {"seconds", r.seconds}};
}

void to_json(Json& j, const ExperimentReport& r) {
  j = {{"kind", to_string(r.kind)},
       {"n", r.n},
       {"p", r.p},
       {"s", r.s},
       {"sigma", r.sigma},
       {"delta", r.delta},
       {"mu", r.mu},
       {"pairs", r.pairs},
       {"bound_norm", {{"q", number(r.bound_q)}, {"r", number(r.bound_r)}}},
       {"grid", r.grid},
       {"band", {r.band_lo, r.band_hi}},
       {"runs", r.runs},
       {"summary",
        {{"all_converged", r.all_converged()},
         {"max_contraction", number(r.max_contraction())},
         {"max_relative_deviation", number(r.max_relative_deviation())},
         {"deviations_non_increasing", r.deviations_non_increasing()},
         {"max_mass_drift", number(r.max_mass_drift())},
         {"max_energy_drift", number(r.max_energy_drift())},
         {"bound_spread", number(r.bound_spread())}}}};
}

Json error_json(const Error& e) { return {{"error", to_string(e.kind())}, {"message", e.what()}}; }

}  // namespace rsl
