#include "rsl/admissibility.hpp"

#include <cmath>
#include <sstream>

#include "rsl/error.hpp"

namespace rsl {

namespace {

using boost::multiprecision::cpp_int;

void require_dimension(int n) {
  if (n < 2) throw Error(ErrorKind::DomainError, "dimension must be >= 2");
}

Rational half() { return Rational(1, 2); }

bool plain_decimal(const std::string& s) { return s.find_first_of("eE") == std::string::npos; }

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorKind::ConfigError, "empty rational");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      Rational num = parse_rational(s.substr(0, slash));
      Rational den = parse_rational(s.substr(slash + 1));
      if (den == 0) throw Error(ErrorKind::ConfigError, "zero denominator in '" + text + "'");
      return num / den;
    }
    if (!plain_decimal(s)) return rational_from_double(std::stod(s));
    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
      negative = s[0] == '-';
      pos = 1;
    }
    std::string digits;
    int decimals = -1;
    for (; pos < s.size(); ++pos) {
      char c = s[pos];
      if (c == '.') {
        if (decimals >= 0) throw Error(ErrorKind::ConfigError, "bad number '" + text + "'");
        decimals = 0;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (decimals >= 0) ++decimals;
      } else {
        throw Error(ErrorKind::ConfigError, "bad number '" + text + "'");
      }
    }
    if (digits.empty()) throw Error(ErrorKind::ConfigError, "bad number '" + text + "'");
    // a leading zero would make cpp_int read the digits as octal
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    cpp_int num(digits);
    cpp_int den = 1;
    for (int i = 0; i < std::max(decimals, 0); ++i) den *= 10;
    Rational r(num, den);
    return negative ? Rational(-r) : r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ConfigError, "bad number '" + text + "'");
  }
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::DomainError, "non-finite value has no rational form");
  // continued fraction convergents
  double rest = x;
  cpp_int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int i = 0; i < 40; ++i) {
    double a = std::floor(rest);
    cpp_int ai(static_cast<long long>(a));
    cpp_int h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > 1000000) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    Rational approx(h1, k1);
    if (std::abs(to_double(approx) - x) <= 1e-12 * std::max(1.0, std::abs(x))) return approx;
    double frac = rest - a;
    if (frac == 0.0) break;
    rest = 1.0 / frac;
  }
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational r{cpp_int(scaled)};
  int shift = exponent - 53;
  cpp_int pow2 = cpp_int(1) << std::abs(shift);
  return shift >= 0 ? Rational(r * pow2) : Rational(r / pow2);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_string(const Rational& x) {
  std::ostringstream out;
  out << numerator(x);
  if (denominator(x) != 1) out << '/' << denominator(x);
  return out.str();
}

Exponent Exponent::of(const Rational& value) {
  if (value < 1) throw Error(ErrorKind::DomainError, "Lebesgue exponent must be >= 1, got " + to_string(value));
  return Exponent(Rational(1) / value);
}

Exponent Exponent::from_reciprocal(const Rational& inverse) {
  if (inverse < 0 || inverse > 1)
    throw Error(ErrorKind::DomainError, "reciprocal exponent outside [0,1]: " + to_string(inverse));
  return Exponent(inverse);
}

Exponent Exponent::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "oo") return infinity();
  return of(parse_rational(text));
}

Exponent Exponent::from_double(double value) {
  if (std::isinf(value) && value > 0) return infinity();
  return of(rational_from_double(value));
}

Rational Exponent::value() const {
  if (is_infinite()) throw Error(ErrorKind::DomainError, "infinite exponent has no finite value");
  return Rational(1) / inv_;
}

double Exponent::to_double() const {
  return is_infinite() ? HUGE_VAL : 1.0 / rsl::to_double(inv_);
}

std::string Exponent::str() const { return is_infinite() ? "inf" : to_string(value()); }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

AdmissibilityResult is_radial_schrodinger_admissible(int n, const Exponent& q, const Exponent& r) {
  require_dimension(n);
  AdmissibilityResult out;
  const Rational& a = q.reciprocal();
  const Rational& b = r.reciprocal();
  if (a == half() && b == 0 && n == 2) out.flags.push_back("schrodinger_exception_2_inf_2");
  if (a > half() || b > half()) return out;
  const Rational line = 2 * a + (2 * n - 1) * b;
  const Rational limit = Rational(n) - half();
  const Rational endpoint_inv = Rational(2 * n - 1, 4 * n + 2);
  if (a <= endpoint_inv) {
    out.verdict = line <= limit ? Verdict::yes : Verdict::no;
  } else if (line < limit) {
    out.verdict = Verdict::yes;
  } else if (line == limit && a < half()) {
    out.verdict = Verdict::unknown;  // open segment between C' and D'
  }
  out.boundary = out.verdict != Verdict::no && on_schrodinger_boundary(n, q, r);
  return out;
}

AdmissibilityResult is_radial_wave_admissible(int n, const Exponent& q, const Exponent& r) {
  require_dimension(n);
  AdmissibilityResult out;
  const Rational& a = q.reciprocal();
  const Rational& b = r.reciprocal();
  if (n == 3 && a == half() && b == 0) out.flags.push_back("wave_exception_2_inf_3");
  if (a > half() || b > half()) return out;
  if (a == 0 && b == half()) {
    out.verdict = Verdict::yes;
    out.boundary = true;
    return out;
  }
  if (n == 2) {
    if (a == Rational(1, 4) && b == 0) {
      out.verdict = Verdict::yes;
      out.boundary = true;
    } else if (a + b < half() && a < Rational(1, 4)) {
      out.verdict = Verdict::yes;
    }
    return out;
  }
  if (a + (n - 1) * b < Rational(n - 1, 2)) out.verdict = Verdict::yes;
  out.boundary = out.verdict == Verdict::yes && (a == half() || a == 0 || b == 0);
  return out;
}

bool on_schrodinger_boundary(int n, const Exponent& q, const Exponent& r) {
  require_dimension(n);
  const Rational& a = q.reciprocal();
  const Rational& b = r.reciprocal();
  if (a > half() || b > half()) return false;
  const Rational line = 2 * a + (2 * n - 1) * b;
  const Rational limit = Rational(n) - half();
  if (line > limit) return false;
  return line == limit || a == half() || b == half() || a == 0 || b == 0;
}

const char* to_string(PairFamily f) {
  return f == PairFamily::radial_schrodinger ? "schrodinger" : "wave";
}

PairFamily pair_family_by_name(const std::string& name) {
  if (name == "schrodinger" || name == "radial_schrodinger") return PairFamily::radial_schrodinger;
  if (name == "wave" || name == "radial_wave") return PairFamily::radial_wave;
  throw Error(ErrorKind::ConfigError, "unknown admissibility family '" + name + "'");
}

AdmissibilityResult is_admissible(PairFamily family, int n, const Exponent& q, const Exponent& r) {
  return family == PairFamily::radial_schrodinger ? is_radial_schrodinger_admissible(n, q, r)
                                                  : is_radial_wave_admissible(n, q, r);
}

std::vector<RegionRow> region_table(PairFamily family, int n, int steps) {
  if (steps < 1) throw Error(ErrorKind::ParameterViolation, "region table needs steps >= 1");
  std::vector<RegionRow> rows;
  rows.reserve(static_cast<std::size_t>((steps + 1) * (steps + 1)));
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; j <= steps; ++j) {
      Rational inv_r(i, 2 * steps), inv_q(j, 2 * steps);
      auto res = is_admissible(family, n, Exponent::from_reciprocal(inv_q), Exponent::from_reciprocal(inv_r));
      rows.push_back({to_double(inv_r), to_double(inv_q), res.verdict, res.boundary});
    }
  }
  return rows;
}

std::vector<RegionVertex> region_vertices(int n) {
  require_dimension(n);
  return {
      {"B'", Rational(n - 2, 2 * n), half()},
      {"C'", Rational(2 * n - 3, 4 * n - 2), half()},
      {"D'", Rational(2 * n - 1, 4 * n + 2), Rational(2 * n - 1, 4 * n + 2)},
  };
}

namespace {

Rational time_coefficient(Equation eq, const Rational& sigma) {
  switch (eq) {
    case Equation::schrodinger: return 2;
    case Equation::wave: return 1;
    case Equation::fractional:
      if (sigma <= 0) throw Error(ErrorKind::UnknownSigma, "fractional gap needs sigma > 0");
      return sigma;
  }
  return 0;
}

}  // namespace

bool gap_condition(Equation eq, int n, const Exponent& q, const Exponent& r, const Rational& gamma,
                   const Rational& sigma) {
  const Rational lhs = time_coefficient(eq, sigma) * q.reciprocal() + n * r.reciprocal();
  return lhs == Rational(n, 2) - gamma;
}

bool dual_gap_condition(Equation eq, int n, const Exponent& q, const Exponent& r, const Rational& gamma,
                        const Rational& sigma) {
  const Rational lhs = time_coefficient(eq, sigma) * q.reciprocal() + n * r.reciprocal();
  const Rational rhs = eq == Equation::wave ? Rational(n, 2) - 1 + gamma : Rational(n, 2) + gamma;
  return lhs == rhs;
}

CriticalExponents critical_exponents(int n, const Rational& p, const Rational& sigma) {
  require_dimension(n);
  if (p <= 0) throw Error(ErrorKind::DomainError, "nonlinearity power must be positive");
  CriticalExponents c;
  c.n = n;
  c.p = p;
  c.sigma = sigma;
  c.s_sch = Rational(n, 2) - 2 / p;
  c.s_w = c.s_sch;
  c.s_c = Rational(n, 2) - sigma / p;
  return c;
}

double s0(int n) {
  require_dimension(n);
  if (n == 2) return (5.0 - std::sqrt(17.0)) / 4.0;
  if (n == 3) return (12.0 - std::sqrt(129.0)) / 6.0;
  const double d = n;
  return (d * d + 3 * d - 3 - std::sqrt(d * d * d * d + 6 * d * d * d - d * d - 14 * d + 9)) / (4 * d - 4);
}

Rational s1(int n, const Rational& p) {
  require_dimension(n);
  if (p <= 0) throw Error(ErrorKind::DomainError, "nonlinearity power must be positive");
  if (p >= Rational(2, n)) return Rational(1 - n, 2 * n + 1);
  return (n * p - n * n * p) / (2 * (-1 + 2 * n + n * p));
}

Rational s2(int n, const Rational& p) {
  require_dimension(n);
  if (p <= 0) throw Error(ErrorKind::DomainError, "nonlinearity power must be positive");
  return (n * p - 3) / (2 * n * p + 2 * n - 2);
}

Thresholds thresholds(int n) {
  Thresholds t;
  t.n = n;
  t.s0 = s0(n);
  t.one_over_2n = 1.0 / (2.0 * n);
  t.s1_at_breakpoint = s1(n, Rational(2, n));
  t.p_upper_s1 = Rational(8 * n + 4, 2 * n * n + 3 * n - 2);
  return t;
}

Rational kg_beam_constants(LinearFamily family, int n, const Exponent& q, int k) {
  require_dimension(n);
  const Rational& a = q.reciprocal();
  const Rational q_end_inv(2 * n - 1, 4 * n + 2);
  if (a > q_end_inv)
    throw Error(ErrorKind::OutOfRangeQ, "q = " + q.str() + " is below (4n+2)/(2n-1)");
  const Rational base = Rational(n, 2);
  if (family == LinearFamily::beam) return k < 0 ? base - (n + 4) * a : base - (n + 2) * a;
  if (k < 0) return base - (n + 2) * a;
  const Rational sharp_inv(n - 1, 2 * n);  // 1/(2n/(n-1))
  Rational rate = base - (n + 1) * a;
  if (a >= sharp_inv) rate += half() - a;
  return rate;
}

Rational default_theta(const Rational& s_w) {
  double gap = (to_double(s_w) - s0(3)) / 10.0;
  Rational scaled(static_cast<long long>(std::floor(gap * 1e6)), 1000000);
  Rational cap(1, 100);
  return scaled < cap ? scaled : cap;
}

PairChoice choose_pairs_nlw(int n, const Rational& s, std::optional<Rational> theta) {
  require_dimension(n);
  const double sd = to_double(s);
  if (sd <= s0(n) + 1e-12)
    throw Error(ErrorKind::NoPairAvailable, "s_w = " + to_string(s) + " is not above s0(n)");
  if (s >= half()) throw Error(ErrorKind::OutOfRangeS, "s_w must be below 1/2");
  PairChoice c;
  c.p = 4 / (n - 2 * s);
  if (s > Rational(1, 2 * n)) {
    c.label = "case 1";
    c.q = c.r = Exponent::of((2 * n + 2) / (n - 2 * s));
    c.q_dual = c.r_dual = Exponent::of((2 * n + 2) / (n + 2 * s - 2));
  } else if (n == 2) {
    c.label = "case 2a";
    c.q = Exponent::of((3 - s) / ((1 - s) * (1 - s)));
    c.r = Exponent::of((3 - s) / (1 - s));
    c.q_dual = Exponent::of(1 / s);
    c.r_dual = Exponent::infinity();
  } else if (n == 3) {
    c.label = "case 2b";
    Rational th = theta ? *theta : default_theta(s);
    if (th <= 0) throw Error(ErrorKind::ParameterViolation, "theta must be positive");
    c.theta = th;
    c.q = Exponent::from_reciprocal(2 * s - 3 * th);
    c.r = Exponent::from_reciprocal(half() - s + th);
    const Rational q = c.q.value(), r = c.r.value();
    c.q_dual = Exponent::of(q / (q - c.p - 1));
    c.r_dual = Exponent::of(r / (r - c.p - 1));
  } else {
    c.label = "case 2c";
    c.q = Exponent::of((2 * n + 8 - 4 * s) / (n - 2 * s));
    c.r = Exponent::of((2 * n * n + 8 * n - 4 * n * s) / (n * n + 3 * n - 4 * n * s + 4 * s * s - 6 * s));
    c.q_dual = Exponent::of(Rational(2));
    c.r_dual = Exponent::of(Rational(2 * n) / (n + 2 * s - 3));
  }
  return c;
}

namespace {

// (p+1) * x' = y in reciprocal form: (p+1)/y = 1 - 1/x.
bool power_relation(const Rational& p, const Exponent& dual, const Exponent& target) {
  return (p + 1) * target.reciprocal() == 1 - dual.reciprocal();
}

}  // namespace

PairCheck verify_nlw_pairs(int n, const Rational& s, const PairChoice& c) {
  PairCheck out;
  auto a = is_radial_wave_admissible(n, c.q, c.r);
  auto b = is_radial_wave_admissible(n, c.q_dual, c.r_dual);
  bool excluded = n == 3 && c.q_dual.reciprocal() == half() && c.r_dual.is_infinite();
  out.admissible = a.admissible() && b.admissible() && !excluded;
  out.gap = gap_condition(Equation::wave, n, c.q, c.r, s);
  out.dual_gap = dual_gap_condition(Equation::wave, n, c.q_dual, c.r_dual, s);
  out.power_relations = power_relation(c.p, c.r_dual, c.r) && power_relation(c.p, c.q_dual, c.q);
  return out;
}

PairChoice choose_pairs_nls(int n, const Rational& s, const Rational& s_sch) {
  require_dimension(n);
  if (s_sch < Rational(1 - n, 2 * n + 1) || s_sch > s || s >= 0)
    throw Error(ErrorKind::OutOfRangeS, "need (1-n)/(2n+1) <= s_sch <= s < 0");
  PairChoice c;
  c.p = 4 / (n - 2 * s_sch);
  if (s == s_sch) {
    c.label = "scattering";
    c.q = c.r = Exponent::of(Rational(2 * (n + 2)) / (n - 2 * s_sch));
    c.q_dual = c.r_dual = Exponent::of(Rational(2 * (n + 2)) / (n + 2 * s_sch));
    return c;
  }
  c.label = "lwp";
  c.q = c.r = Exponent::of(Rational(2 * (n + 2)) / (n - 2 * s));
  const Rational common = (n + 2 * s) / Rational(2 * n + 4);
  const Rational scale = (n + 2) * (n - 2 * s_sch);
  c.q_dual = Exponent::from_reciprocal(common - 2 * n * (s - s_sch) / scale);
  c.r_dual = Exponent::from_reciprocal(common + (4 * s - 4 * s_sch) / scale);
  return c;
}

PairCheck verify_nls_pairs(int n, const Rational& s, const Rational& s_sch, const PairChoice& c) {
  PairCheck out;
  auto a = is_radial_schrodinger_admissible(n, c.q, c.r);
  auto b = is_radial_schrodinger_admissible(n, c.q_dual, c.r_dual);
  out.admissible = a.admissible() && b.admissible() && a.flags.empty() && b.flags.empty();
  out.gap = gap_condition(Equation::schrodinger, n, c.q, c.r, s);
  out.dual_gap = dual_gap_condition(Equation::schrodinger, n, c.q_dual, c.r_dual, s);
  out.power_relations = power_relation(c.p, c.r_dual, c.q);
  if (s == s_sch) out.power_relations = out.power_relations && power_relation(c.p, c.q_dual, c.q);
  return out;
}

}  // namespace rsl
