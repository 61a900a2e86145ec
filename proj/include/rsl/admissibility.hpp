#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace rsl {

using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& text);  // "a/b", "-0.25", "3"
// Nearest fraction with denominator <= 10^6 when within 1e-12, else the exact
// binary value of x.
Rational rational_from_double(double x);
double to_double(const Rational& x);
std::string to_string(const Rational& x);

// Lebesgue exponent in [1, inf], stored exactly through its reciprocal.
class Exponent {
 public:
  Exponent() = default;
  static Exponent infinity() { return Exponent(Rational(0)); }
  static Exponent of(const Rational& value);
  static Exponent from_reciprocal(const Rational& inverse);
  static Exponent parse(const std::string& text);  // "10/3", "3.5", "inf"
  static Exponent from_double(double value);

  bool is_infinite() const { return inv_ == 0; }
  const Rational& reciprocal() const { return inv_; }
  Rational value() const;  // throws for infinity
  double to_double() const;
  std::string str() const;
  // Hoelder conjugate.
  Exponent conjugate() const { return from_reciprocal(Rational(1) - inv_); }

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.inv_ == b.inv_; }

 private:
  explicit Exponent(Rational inverse) : inv_(std::move(inverse)) {}
  Rational inv_{1, 2};
};

enum class Verdict { yes, no, unknown };
const char* to_string(Verdict v);

struct AdmissibilityResult {
  Verdict verdict = Verdict::no;
  bool boundary = false;
  std::vector<std::string> flags;
  bool admissible() const { return verdict == Verdict::yes; }
};

// q, r >= 2 and either q >= (4n+2)/(2n-1) with 2/q + (2n-1)/r <= n - 1/2, or
// 2 <= q < (4n+2)/(2n-1) with strict inequality. Points on the open segment
// where equality holds below the threshold have unknown status.
AdmissibilityResult is_radial_schrodinger_admissible(int n, const Exponent& q, const Exponent& r);
AdmissibilityResult is_radial_wave_admissible(int n, const Exponent& q, const Exponent& r);
// On the topological boundary of the closed Schrodinger region in (1/r, 1/q).
bool on_schrodinger_boundary(int n, const Exponent& q, const Exponent& r);

enum class PairFamily { radial_schrodinger, radial_wave };
const char* to_string(PairFamily f);
PairFamily pair_family_by_name(const std::string& name);
AdmissibilityResult is_admissible(PairFamily family, int n, const Exponent& q, const Exponent& r);

struct RegionRow {
  double inv_r = 0.0, inv_q = 0.0;
  Verdict verdict = Verdict::no;
  bool boundary = false;
};
// Uniform (1/r, 1/q) lattice on [0,1/2]^2 with `steps` intervals per axis.
std::vector<RegionRow> region_table(PairFamily family, int n, int steps);

struct RegionVertex {
  std::string name;
  Rational inv_r, inv_q;
};
// B', C', D' in (1/r, 1/q) coordinates.
std::vector<RegionVertex> region_vertices(int n);

enum class Equation { schrodinger, wave, fractional };

// c/q + n/r = n/2 - gamma with c = 2 (schrodinger), 1 (wave), sigma (fractional).
bool gap_condition(Equation eq, int n, const Exponent& q, const Exponent& r, const Rational& gamma,
                   const Rational& sigma = Rational(0));
// Dual-pair relation: c/q + n/r = n/2 + gamma, or n/2 - 1 + gamma for the wave.
bool dual_gap_condition(Equation eq, int n, const Exponent& q, const Exponent& r,
                        const Rational& gamma, const Rational& sigma = Rational(0));

struct CriticalExponents {
  int n = 2;
  Rational p, sigma;
  Rational s_sch, s_w, s_c;
};
CriticalExponents critical_exponents(int n, const Rational& p, const Rational& sigma = Rational(2));

double s0(int n);
// Piecewise threshold with breakpoint p = 2/n.
Rational s1(int n, const Rational& p);
Rational s2(int n, const Rational& p);

struct Thresholds {
  int n = 2;
  double s0 = 0.0;
  double one_over_2n = 0.0;
  Rational s1_at_breakpoint;  // s1(n, 2/n)
  Rational p_upper_s1;        // (8n+4)/(2n^2+3n-2)
};
Thresholds thresholds(int n);

enum class LinearFamily { klein_gordon, beam };
// Per-k log2 rate of C(q,k) or B(q,k).
Rational kg_beam_constants(LinearFamily family, int n, const Exponent& q, int k);

struct PairChoice {
  std::string label;  // "case 1", "case 2a", ..., "scattering", "lwp"
  Rational p;
  Exponent q, r, q_dual, r_dual;
  std::optional<Rational> theta;
};

struct PairCheck {
  bool admissible = false;
  bool gap = false;
  bool dual_gap = false;
  bool power_relations = false;
  bool all() const { return admissible && gap && dual_gap && power_relations; }
};

Rational default_theta(const Rational& s_w);
PairChoice choose_pairs_nlw(int n, const Rational& s_w, std::optional<Rational> theta = std::nullopt);
PairCheck verify_nlw_pairs(int n, const Rational& s_w, const PairChoice& c);
PairChoice choose_pairs_nls(int n, const Rational& s, const Rational& s_sch);
PairCheck verify_nls_pairs(int n, const Rational& s, const Rational& s_sch, const PairChoice& c);

}  // namespace rsl
