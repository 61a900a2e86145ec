#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rsl/admissibility.hpp"
#include "rsl/dispersion.hpp"
#include "rsl/error.hpp"
#include "rsl/estimates.hpp"

namespace rsl::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

[[noreturn]] void bad(const std::string& text, const char* what) {
  throw Error(ErrorKind::ConfigError, "'" + text + "' is not " + what);
}

double to_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    bad(text, "a number");
  }
  if (used != text.size() || !std::isfinite(v)) bad(text, "a finite number");
  return v;
}

long long to_integer(const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    bad(text, "an integer");
  }
  if (used != text.size()) bad(text, "an integer");
  return v;
}

Field text_field(const char* name, const char* help, std::string& slot) {
  return {name, help, [&slot](const std::string& v) { slot = v; }, [&slot] { return Json(slot); }};
}
Field real_field(const char* name, const char* help, double& slot) {
  return {name, help, [&slot](const std::string& v) { slot = to_double(v); }, [&slot] { return Json(slot); }};
}
template <class Int>
Field int_field(const char* name, const char* help, Int& slot) {
  return {name, help, [&slot](const std::string& v) { slot = static_cast<Int>(to_integer(v)); },
          [&slot] { return Json(slot); }};
}
Field range_field(const char* name, const char* help, IntRange& slot) {
  return {name, help, [&slot](const std::string& v) { slot = IntRange::parse(v); }, [&slot] { return Json(slot.str()); }};
}

bool uses(const RunConfig& c, std::initializer_list<const char*> commands) {
  return std::any_of(commands.begin(), commands.end(), [&](const char* x) { return c.command == x; });
}

// Exponent parse plus the q >= 2 floor shared by every estimate.
void check_exponent(std::vector<Violation>& out, const char* field, const std::string& text) {
  try {
    const Exponent e = Exponent::parse(text);
    if (!e.is_infinite() && e.value() < 2) out.push_back({"OutOfRangeQ", field, "exponent " + text + " is below 2"});
  } catch (const Error& e) {
    out.push_back({to_string(e.kind()), field, e.what()});
  }
}

void check_rational(std::vector<Violation>& out, const char* field, const std::string& text) {
  try {
    parse_rational(text);
  } catch (const Error& e) {
    out.push_back({to_string(e.kind()), field, e.what()});
  }
}

void check_symbol(std::vector<Violation>& out, const std::string& name) {
  try {
    symbol_by_name(name);
  } catch (const Error& e) {
    out.push_back({to_string(e.kind()), "symbol", e.what()});
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) items.push_back(trim(item));
  return items;
}

}  // namespace

std::vector<int> IntRange::values() const {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::string IntRange::str() const { return std::to_string(lo) + ".." + std::to_string(hi); }

IntRange IntRange::parse(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = static_cast<int>(to_integer(trim(text)));
    return {v, v};
  }
  IntRange r{static_cast<int>(to_integer(trim(text.substr(0, dots)))),
             static_cast<int>(to_integer(trim(text.substr(dots + 2))))};
  if (r.lo > r.hi) throw Error(ErrorKind::ConfigError, "empty range '" + text + "'");
  return r;
}

std::vector<Field> fields(RunConfig& c) {
  return {
      text_field("symbol", "dispersion symbol: schrodinger, wave, klein-gordon, beam, fourth-order, fractional:<sigma>", c.symbol),
      text_field("family", "pair family: schrodinger or wave", c.family),
      int_field("n", "spatial dimension", c.n),
      text_field("q", "time exponent (a/b, decimal or inf)", c.q),
      text_field("r", "space exponent; defaults to q", c.r),
      text_field("q-dual", "dual time exponent for retarded; defaults to q", c.q_dual),
      text_field("r-dual", "dual space exponent for retarded; defaults to r", c.r_dual),
      text_field("qs", "comma separated exponents for fit-j", c.qs),
      text_field("gamma", "regularity in the gap condition", c.gamma),
      text_field("sigma", "fractional order", c.sigma),
      text_field("p", "nonlinearity power; derived when empty", c.p),
      text_field("s", "data regularity (s_sch, s_w or fnls s)", c.s),
      text_field("s-sch", "critical regularity for Schrodinger pairs; defaults to s", c.s_sch),
      real_field("a", "maximal function power", c.a),
      range_field("k", "frequency scales lo..hi", c.k),
      int_field("k0", "single frequency scale for propagate, split and fit-j", c.k0),
      range_field("j", "annulus or family indices lo..hi", c.j),
      range_field("log2-R", "radii 2^e for e in lo..hi", c.log2_R),
      range_field("log2-inv-delta", "tube widths 2^-e for e in lo..hi", c.log2_inv_delta),
      range_field("band", "data band 2^lo..2^hi for the solvers", c.band),
      text_field("regime", "annulus regime: inner, outer_dispersive, outer_curvature", c.regime),
      real_field("delta", "data size for the solvers", c.delta),
      int_field("mu", "sign of the nonlinearity", c.mu),
      int_field("trials", "random trials per scale", c.trials),
      int_field("seed", "random seed", c.seed),
      int_field("seeds", "number of solver runs (seeds seed..seed+seeds-1)", c.seeds),
      real_field("T", "solver time horizon", c.T),
      real_field("T0", "base time window", c.T0),
      real_field("R0", "base radial margin", c.R0),
      real_field("tol", "window saturation tolerance", c.tol),
      int_field("max-doublings", "window doublings before giving up", c.max_doublings),
      real_field("max-phase-step", "quadrature phase per panel", c.max_phase_step),
      int_field("panel-order", "Gauss points per panel", c.panel_order),
      real_field("step-phase", "solver phase per time step", c.step_phase),
      int_field("max-iter", "Picard iteration cap", c.max_iter),
      real_field("picard-tol", "relative Picard tolerance", c.picard_tol),
      int_field("refinements", "refinement levels for hls", c.refinements),
      int_field("grid-points", "samples per direction for counter-schrodinger", c.grid_points),
      real_field("resolution", "sampling density factor for maximal", c.resolution),
      text_field("out", "output root; RSL_OUTPUT_DIR or ./rsl-output when empty", c.out),
      text_field("run-id", "output subdirectory; defaults to the command", c.run_id),
      int_field("threads", "worker cap, 0 for all cores", c.threads),
  };
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "propagate",  "split",         "norm-sweep",          "fit-k",  "fit-j",     "smoothing",  "maximal",
      "hls",        "counter-wave",  "counter-schrodinger", "knapp",  "l6",        "retarded",   "admissible",
      "thresholds", "constants",     "pairs",               "solve-nls", "solve-nlw", "solve-fnls", "conjecture-probe"};
  return names;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::ConfigError, "cannot read config file " + path);
  std::map<std::string, std::string> raw;
  int line_no = 0;
  for (std::string line; std::getline(f, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::ConfigError, path + ":" + std::to_string(line_no) + ": expected key = value");
    raw[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return raw;
}

RunConfig resolve(const std::string& command, const std::map<std::string, std::string>& raw,
                  std::vector<Violation>& violations) {
  RunConfig c;
  c.command = command;
  auto table = fields(c);
  for (const auto& [key, value] : raw) {
    auto it = std::find_if(table.begin(), table.end(), [&](const Field& f) { return f.name == key; });
    if (it == table.end()) {
      violations.push_back({"ConfigError", key, "unknown key"});
      continue;
    }
    try {
      it->set(value);
    } catch (const Error& e) {
      violations.push_back({to_string(e.kind()), key, e.what()});
    }
  }
  if (c.r.empty()) c.r = c.q;
  if (c.q_dual.empty()) c.q_dual = c.q;
  if (c.r_dual.empty()) c.r_dual = c.r;
  if (c.s.empty()) c.s = command == "solve-nlw" ? "1/4" : command == "solve-fnls" ? "0" : "-1/10";
  if (c.s_sch.empty()) c.s_sch = c.s;
  if (c.run_id.empty()) c.run_id = command;
  return c;
}

std::vector<Violation> validate(const RunConfig& c) {
  std::vector<Violation> out;
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), c.command) == names.end()) {
    out.push_back({"ConfigError", "command", "unknown command '" + c.command + "'"});
    return out;
  }
  if (c.n < 2) out.push_back({"DomainError", "n", "dimension must be >= 2"});
  if (c.threads < 0) out.push_back({"ParameterViolation", "threads", "worker cap cannot be negative"});
  if (c.trials < 1) out.push_back({"ParameterViolation", "trials", "need at least one trial"});
  if (c.seeds < 1) out.push_back({"ParameterViolation", "seeds", "need at least one seed"});
  if (!(c.T > 0) || !(c.T0 > 0) || !(c.R0 > 0)) out.push_back({"ParameterViolation", "T", "windows must be positive"});
  if (!(c.tol > 0 && c.tol < 1)) out.push_back({"ParameterViolation", "tol", "tolerance must lie in (0, 1)"});
  if (!(c.picard_tol > 0 && c.picard_tol < 1)) out.push_back({"ParameterViolation", "picard-tol", "tolerance must lie in (0, 1)"});
  if (c.max_doublings < 1) out.push_back({"ParameterViolation", "max-doublings", "need at least one doubling"});
  if (!(c.max_phase_step > 0)) out.push_back({"ParameterViolation", "max-phase-step", "must be positive"});
  if (c.panel_order < 1 || c.panel_order > 64) out.push_back({"ParameterViolation", "panel-order", "must lie in 1..64"});
  if (!(c.step_phase > 0)) out.push_back({"ParameterViolation", "step-phase", "must be positive"});
  if (c.max_iter < 1) out.push_back({"ParameterViolation", "max-iter", "need at least one iteration"});
  if (c.mu != 1 && c.mu != -1) out.push_back({"ParameterViolation", "mu", "sign must be 1 or -1"});
  if (c.refinements < 1) out.push_back({"ParameterViolation", "refinements", "need at least one level"});
  if (c.grid_points < 4) out.push_back({"ParameterViolation", "grid-points", "need at least 4 points"});
  if (!(c.resolution > 0)) out.push_back({"ParameterViolation", "resolution", "must be positive"});

  // exponents are checked wherever they are given, so q = 1.5 is caught by any command
  check_exponent(out, "q", c.q);
  // r and the dual pair default to q; only report them when they were set apart
  for (auto [name, text] : {std::pair{"r", &c.r}, {"q-dual", &c.q_dual}, {"r-dual", &c.r_dual}})
    if (*text != c.q) check_exponent(out, name, *text);
  for (const std::string& q : split_list(c.qs)) check_exponent(out, "qs", q);
  for (auto [name, text] : {std::pair{"gamma", &c.gamma}, {"sigma", &c.sigma}, {"s", &c.s}, {"s-sch", &c.s_sch}})
    check_rational(out, name, *text);
  if (!c.p.empty()) check_rational(out, "p", c.p);

  if (uses(c, {"propagate", "split", "norm-sweep", "fit-k", "fit-j", "smoothing", "l6", "retarded", "conjecture-probe"}))
    check_symbol(out, c.symbol);
  if (uses(c, {"constants"}) && c.symbol != "klein-gordon" && c.symbol != "beam")
    out.push_back({"UnknownSymbol", "symbol", "constants are tabulated for klein-gordon and beam"});
  if (uses(c, {"admissible", "pairs"})) {
    try {
      pair_family_by_name(c.family);
    } catch (const Error& e) {
      out.push_back({to_string(e.kind()), "family", e.what()});
    }
  }
  if (uses(c, {"fit-j"}) && c.regime != "inner" && c.regime != "outer_dispersive" && c.regime != "outer_curvature")
    out.push_back({"ConfigError", "regime", "regime must be inner, outer_dispersive or outer_curvature"});
  if (uses(c, {"maximal"}) && !(c.a > 0)) out.push_back({"ParameterViolation", "a", "power must be positive"});
  if (uses(c, {"fit-k"}) && out.empty()) {
    try {
      const double q = Exponent::parse(c.q).to_double();
      const BoundForm form = q > 2.0 * c.n / (c.n - 1.0) ? BoundForm::dispersive : BoundForm::curvature;
      predicted_exponent(symbol_by_name(c.symbol), c.n, q, c.k.hi, form);
    } catch (const Error& e) {
      out.push_back({to_string(e.kind()), "q", e.what()});
    }
  }
  if (uses(c, {"solve-nls", "solve-nlw", "solve-fnls"}) && !(c.delta > 0))
    out.push_back({"ParameterViolation", "delta", "data size must be positive"});
  if (!out.empty()) return out;

  const Rational s = parse_rational(c.s);
  const Rational nls_floor(1 - c.n, 2 * c.n + 1);
  const bool nls_s_ok = s >= nls_floor && s < 0;
  const bool nlw_s_ok = rsl::to_double(s) > s0(c.n) && s < Rational(1, 2);
  if (uses(c, {"solve-nls"}) && !nls_s_ok)
    out.push_back({"OutOfRangeS", "s", "s_sch must lie in [" + to_string(nls_floor) + ", 0)"});
  if (uses(c, {"solve-nlw"}) && !nlw_s_ok)
    out.push_back({"OutOfRangeS", "s", "s_w must lie in (s0(n), 1/2)"});
  if (uses(c, {"solve-fnls"})) {
    const Rational sigma = parse_rational(c.sigma);
    if (sigma < Rational(2 * c.n, 2 * c.n - 1) || sigma >= 2)
      out.push_back({"OutOfRangeSigma", "sigma", "sigma must lie in [2n/(2n-1), 2)"});
  }
  if (uses(c, {"knapp"}) && !(parse_rational(c.sigma) > 0))
    out.push_back({"OutOfRangeSigma", "sigma", "sigma must be positive"});
  if (uses(c, {"pairs"})) {
    if (c.family == "wave" && !nlw_s_ok) out.push_back({"NoPairAvailable", "s", "s_w must lie in (s0(n), 1/2)"});
    if (c.family != "wave" && (!nls_s_ok || parse_rational(c.s_sch) > s || parse_rational(c.s_sch) < nls_floor))
      out.push_back({"OutOfRangeS", "s", "need " + to_string(nls_floor) + " <= s_sch <= s < 0"});
  }
  return out;
}

Json to_json(const RunConfig& config) {
  RunConfig copy = config;
  Json j;
  j["command"] = copy.command;
  for (const Field& f : fields(copy)) j[f.name] = f.get();
  return j;
}

Json violations_json(const std::vector<Violation>& violations) {
  Json list = Json::array();
  for (const Violation& v : violations) list.push_back({{"kind", v.kind}, {"field", v.field}, {"message", v.message}});
  Json j;
  j["error"] = violations.empty() ? "ConfigError" : violations.front().kind;
  j["violations"] = list;
  return j;
}

}  // namespace rsl::cli
