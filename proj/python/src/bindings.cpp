#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rsl/admissibility.hpp"
#include "rsl/error.hpp"
#include "rsl/estimates.hpp"
#include "rsl/nonlinear.hpp"
#include "rsl/parallel.hpp"
#include "rsl/report.hpp"
#include "rsl/special_functions.hpp"

namespace py = pybind11;
using namespace rsl;

namespace {

// Reports cross the boundary as plain dicts through their JSON form.
template <class T>
py::object as_dict(const T& value) {
  const Json j = value;
  return py::module_::import("json").attr("loads")(j.dump());
}

NormPolicy norm_policy(double T0, double R0, double tol, double max_phase_step) {
  NormPolicy p;
  p.T0 = T0;
  p.R0 = R0;
  p.tol = tol;
  p.quadrature.max_phase_step = max_phase_step;
  return p;
}

ExperimentSettings settings(double T, int mu) {
  ExperimentSettings s;
  s.T = T;
  s.mu = mu;
  return s;
}

AnnulusRegime regime_by_name(const std::string& name) {
  if (name == "inner") return AnnulusRegime::inner;
  if (name == "outer_dispersive") return AnnulusRegime::outer_dispersive;
  if (name == "outer_curvature") return AnnulusRegime::outer_curvature;
  throw Error(ErrorKind::ConfigError, "unknown regime '" + name + "'");
}

constexpr double kQuarterPi = 0.78539816339744831;

}  // namespace

PYBIND11_MODULE(_rsl, m) {
  m.doc() = "Radial dispersive estimates: propagators, norm scaling, admissibility and small-data solvers";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("set_thread_count", &set_thread_count, py::arg("count"));

  py::class_<DispersionSymbol>(m, "Symbol")
      .def_readonly("name", &DispersionSymbol::name)
      .def_readonly("m1", &DispersionSymbol::m1)
      .def_readonly("m2", &DispersionSymbol::m2)
      .def("phi", [](const DispersionSymbol& s, double r) { return s.phi(r); })
      .def("dphi", [](const DispersionSymbol& s, double r) { return s.dphi(r); })
      .def("d2phi", [](const DispersionSymbol& s, double r) { return s.d2phi(r); });
  m.def("symbol", &symbol_by_name, py::arg("name"));
  m.def(
      "verify_hypotheses",
      [](const std::string& name, int k_min, int k_max, int samples, double window) {
        return as_dict(verify_hypotheses(symbol_by_name(name), k_min, k_max, samples, window));
      },
      py::arg("symbol"), py::arg("k_min"), py::arg("k_max"), py::arg("samples_per_octave") = 64, py::arg("window") = 10.0);

  m.def("bessel_j", py::vectorize(&bessel_j), py::arg("nu"), py::arg("x"));
  m.def("radial_kernel", py::vectorize(&radial_kernel), py::arg("n"), py::arg("x"));

  m.def(
      "propagate",
      [](const std::string& name, int n, int k, const std::vector<double>& times, const std::vector<double>& radii) {
        const DispersionSymbol sym = symbol_by_name(name);
        NodeSet t{times, std::vector<double>(times.size(), 1.0)};
        NodeSet r{radii, std::vector<double>(radii.size(), 1.0)};
        if (times.empty() || radii.empty()) throw Error(ErrorKind::DomainError, "need times and radii");
        const auto [t_lo, t_hi] = std::minmax_element(times.begin(), times.end());
        const auto [r_lo, r_hi] = std::minmax_element(radii.begin(), radii.end());
        const SpaceTimeField f =
            evolve(sym, flat_band_profile(n, k), k, make_physical_grid(t, *t_lo, *t_hi, r, *r_lo, *r_hi));
        py::array_t<std::complex<double>> out({times.size(), radii.size()});
        std::copy(f.values.begin(), f.values.end(), out.mutable_data());
        return out;
      },
      py::arg("symbol"), py::arg("n"), py::arg("k"), py::arg("times"), py::arg("radii"),
      "S(t) P_k of the normalized flat band datum, as a times x radii array");

  m.def(
      "fit_frequency_scaling",
      [](const std::string& name, int n, double q, const std::vector<int>& ks, double T0, double R0, double tol,
         double max_phase_step) {
        return as_dict(fit_frequency_scaling(symbol_by_name(name), n, q, ks, norm_policy(T0, R0, tol, max_phase_step)));
      },
      py::arg("symbol"), py::arg("n"), py::arg("q"), py::arg("ks"), py::arg("T0") = 4.0, py::arg("R0") = 40.0,
      py::arg("tol") = 1e-2, py::arg("max_phase_step") = kQuarterPi);
  m.def(
      "fit_annulus_scaling",
      [](const std::string& name, int n, const std::vector<double>& qs, int k, const std::vector<int>& js,
         const std::string& regime) {
        return as_dict(fit_annulus_scaling(symbol_by_name(name), n, qs, k, js, regime_by_name(regime)));
      },
      py::arg("symbol"), py::arg("n"), py::arg("qs"), py::arg("k"), py::arg("js"), py::arg("regime"));
  m.def(
      "slice_l2_check",
      [](const std::string& name, int n, int k, double R0) {
        NormPolicy p;
        p.R0 = R0;
        return as_dict(slice_l2_check(symbol_by_name(name), n, k, {-1.0, -0.5, 0.0, 0.5, 1.0}, p));
      },
      py::arg("symbol"), py::arg("n"), py::arg("k"), py::arg("R0") = 60.0);
  m.def(
      "smoothing_check",
      [](const std::string& name, const std::vector<int>& ks, double q, int trials, std::uint64_t seed) {
        return as_dict(smoothing_check(symbol_by_name(name), ks, q, trials, seed));
      },
      py::arg("symbol"), py::arg("ks"), py::arg("q"), py::arg("trials") = 4, py::arg("seed") = 20240611);
  m.def(
      "maximal_check", [](double a, const std::vector<int>& ks) { return as_dict(maximal_check(a, ks)); },
      py::arg("a"), py::arg("ks"));
  m.def(
      "counterexample_wave",
      [](int n, double q, const std::vector<double>& Rs) { return as_dict(counterexample_wave(n, q, Rs)); },
      py::arg("n"), py::arg("q"), py::arg("Rs"));
  m.def(
      "counterexample_schrodinger",
      [](int n, double q, const std::vector<int>& js) { return as_dict(counterexample_schrodinger(n, q, js)); },
      py::arg("n"), py::arg("q"), py::arg("js"));
  m.def(
      "knapp_fractional",
      [](double sigma, const std::vector<double>& deltas, double q, double r) {
        return as_dict(knapp_fractional(sigma, deltas, q, r));
      },
      py::arg("sigma"), py::arg("deltas"), py::arg("q"), py::arg("r"));
  m.def(
      "strichartz_l6_check",
      [](const std::string& name, const std::vector<int>& ks, int trials) {
        return as_dict(strichartz_l6_check(symbol_by_name(name), ks, trials));
      },
      py::arg("symbol"), py::arg("ks"), py::arg("trials") = 2);

  m.def(
      "is_admissible",
      [](const std::string& family, int n, const std::string& q, const std::string& r) {
        return as_dict(is_admissible(pair_family_by_name(family), n, Exponent::parse(q), Exponent::parse(r)));
      },
      py::arg("family"), py::arg("n"), py::arg("q"), py::arg("r"));
  m.def("s0", &s0, py::arg("n"));
  m.def("thresholds", [](int n) { return as_dict(thresholds(n)); }, py::arg("n"));
  m.def(
      "critical_exponents",
      [](int n, const std::string& p, const std::string& sigma) {
        return as_dict(critical_exponents(n, parse_rational(p), parse_rational(sigma)));
      },
      py::arg("n"), py::arg("p"), py::arg("sigma") = "2");
  m.def(
      "choose_pairs_nlw",
      [](int n, const std::string& s_w) {
        const Rational s = parse_rational(s_w);
        const PairChoice c = choose_pairs_nlw(n, s);
        py::dict d = as_dict(c);
        d["check"] = as_dict(verify_nlw_pairs(n, s, c));
        return d;
      },
      py::arg("n"), py::arg("s_w"));
  m.def(
      "choose_pairs_nls",
      [](int n, const std::string& s_text, const std::string& s_sch_text) {
        const Rational s = parse_rational(s_text), sch = parse_rational(s_sch_text);
        const PairChoice c = choose_pairs_nls(n, s, sch);
        py::dict d = as_dict(c);
        d["check"] = as_dict(verify_nls_pairs(n, s, sch, c));
        return d;
      },
      py::arg("n"), py::arg("s"), py::arg("s_sch"));

  m.def(
      "solve_nls",
      [](int n, double s_sch, double delta, const std::vector<std::uint64_t>& seeds, double T, int mu) {
        return as_dict(nls_small_data_experiment(n, s_sch, delta, seeds, settings(T, mu)));
      },
      py::arg("n"), py::arg("s_sch"), py::arg("delta"), py::arg("seeds"), py::arg("T") = 16.0, py::arg("mu") = 1);
  m.def(
      "solve_nlw",
      [](int n, double s_w, double delta, const std::vector<std::uint64_t>& seeds, double T, int mu) {
        return as_dict(nlw_small_data_experiment(n, s_w, delta, seeds, settings(T, mu)));
      },
      py::arg("n"), py::arg("s_w"), py::arg("delta"), py::arg("seeds"), py::arg("T") = 16.0, py::arg("mu") = 1);
  m.def(
      "solve_fnls",
      [](int n, double sigma, double p, double s, double delta, const std::vector<std::uint64_t>& seeds, double T,
         int mu) { return as_dict(fnls_experiment(n, sigma, p, s, delta, seeds, settings(T, mu))); },
      py::arg("n"), py::arg("sigma"), py::arg("p"), py::arg("s"), py::arg("delta"), py::arg("seeds"),
      py::arg("T") = 16.0, py::arg("mu") = 1);
}
