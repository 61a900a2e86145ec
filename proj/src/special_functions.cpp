#include "rsl/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rsl/error.hpp"

namespace rsl {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesLimit = 12.0;

bool is_integer(double v) { return v == std::floor(v); }
bool is_half_integer(double v) { return is_integer(v - 0.5); }

// sum_m (-1)^m (x/2)^{2m} / (m! Gamma(m+nu+1)), i.e. J_nu(x) / (x/2)^nu
double scaled_series(double nu, double x) {
  const long double y = -0.25L * static_cast<long double>(x) * x;
  long double term = 1.0L / std::tgamma(static_cast<long double>(nu) + 1.0L);
  long double sum = term;
  for (int m = 1; m < 300; ++m) {
    term *= y / (static_cast<long double>(m) * (m + nu));
    sum += term;
    if (std::fabs(term) < 1e-21L * std::fabs(sum) && m > x) break;
  }
  return static_cast<double>(sum);
}

double series(double nu, double x) {
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (nu > 100.0) {
    const double log_prefactor = nu * std::log(0.5 * x) - std::lgamma(nu + 1.0);
    return std::exp(log_prefactor) * std::tgamma(nu + 1.0) * scaled_series(nu, x);
  }
  return std::pow(0.5 * x, nu) * scaled_series(nu, x);
}

// Hankel expansion; exact after finitely many terms for half-integer nu.
double hankel_asymptotic(double nu, double x) {
  const bool terminating = is_half_integer(nu);
  const double mu = 4.0 * nu * nu;
  double p = 0.0, q = 0.0;
  double a = 1.0;  // a_k / x^k
  double previous = HUGE_VAL;
  for (int k = 0; k < 200; ++k) {
    const double mag = std::abs(a);
    if (!terminating && mag > previous) break;
    if ((k & 1) == 0)
      p += ((k / 2) & 1) ? -a : a;
    else
      q += ((k / 2) & 1) ? -a : a;
    if (mag == 0.0 || (!terminating && mag < 1e-17)) break;
    previous = mag;
    const double odd = 2.0 * k + 1.0;
    a *= (mu - odd * odd) / ((k + 1.0) * 8.0 * x);
  }
  const double chi = x - (0.5 * nu + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

// Bessel's integral, periodic integrand: trapezoid converges geometrically.
double bessel_integral_integer(int m, double x) {
  const int nodes = static_cast<int>(std::ceil(0.5 * (x + std::abs(m)) + 24.0));
  const double h = kPi / nodes;
  double sum = 0.5 * (1.0 + std::cos(m * kPi - 0.0));
  for (int i = 1; i < nodes; ++i) {
    const double th = i * h;
    sum += std::cos(m * th - x * std::sin(th));
  }
  return sum / nodes;
}

// Schlafli's integral for arbitrary order.
double schlafli(double nu, double x) {
  const int order = 16;
  static const double gl_x[16] = {-0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
                                  -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
                                  -0.2816035507792589, -0.0950125098376374, 0.0950125098376374,
                                  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
                                  0.7554044083550030,  0.8656312023878318,  0.9445750230732326,
                                  0.9894009349916499};
  static const double gl_w[16] = {0.0271524594117541, 0.0622535239386479, 0.0951585116824928,
                                  0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
                                  0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
                                  0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
                                  0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
                                  0.0271524594117541};
  const int panels = static_cast<int>(std::ceil((x + nu) / 3.0)) + 4;
  const double h = kPi / panels;
  double first = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double c = (p + 0.5) * h;
    for (int i = 0; i < order; ++i) {
      const double th = c + 0.5 * h * gl_x[i];
      first += 0.5 * h * gl_w[i] * std::cos(nu * th - x * std::sin(th));
    }
  }
  first /= kPi;
  const double s = std::sin(nu * kPi);
  if (s == 0.0) return first;
  // integrand exp(-x sinh u - nu u) is negligible once x sinh u + nu u > 40
  double upper = 1.0;
  while (x * std::sinh(upper) + nu * upper < 40.0) upper *= 1.5;
  const int tail_panels = 24;
  const double ht = upper / tail_panels;
  double second = 0.0;
  for (int p = 0; p < tail_panels; ++p) {
    const double c = (p + 0.5) * ht;
    for (int i = 0; i < order; ++i) {
      const double u = c + 0.5 * ht * gl_x[i];
      second += 0.5 * ht * gl_w[i] * std::exp(-x * std::sinh(u) - nu * u);
    }
  }
  return first - s / kPi * second;
}

}  // namespace

double bessel_j(double nu, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorKind::DomainError, "bessel_j needs x >= 0, got " + std::to_string(x));
  if (!(nu >= -0.5)) throw Error(ErrorKind::DomainError, "bessel_j needs nu >= -1/2, got " + std::to_string(nu));
  if (nu == -0.5) {
    if (x == 0.0) throw Error(ErrorKind::DomainError, "J_{-1/2} is singular at 0");
    return std::sqrt(2.0 / (kPi * x)) * std::cos(x);
  }
  if (x <= kSeriesLimit) return series(nu, x);
  const double asymptotic_from = std::max(30.0, 30.0 + nu * nu);
  if (x >= asymptotic_from || is_half_integer(nu)) return hankel_asymptotic(nu, x);
  if (is_integer(nu) && nu < 1000.0) return bessel_integral_integer(static_cast<int>(nu), x);
  return schlafli(nu, x);
}

double radial_kernel(int n, double x) {
  if (n < 1) throw Error(ErrorKind::DomainError, "dimension must be positive");
  if (!(x >= 0.0)) throw Error(ErrorKind::DomainError, "radial_kernel needs x >= 0");
  const double nu = 0.5 * (n - 2);
  switch (n) {
    case 3:
      if (x < 1e-3) {
        const double x2 = x * x;
        return std::sqrt(2.0 / kPi) * (1.0 - x2 / 6.0 + x2 * x2 / 120.0);
      }
      return std::sqrt(2.0 / kPi) * std::sin(x) / x;
    case 5:
      if (x < 0.1) {
        const double x2 = x * x;
        return std::sqrt(2.0 / kPi) * (1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0 - x2 * x2 * x2 / 45360.0);
      }
      return std::sqrt(2.0 / kPi) * (std::sin(x) / x - std::cos(x)) / (x * x);
    default:
      break;
  }
  if (x <= kSeriesLimit) return std::pow(0.5, nu) * scaled_series(nu, x);
  return bessel_j(nu, x) / std::pow(x, nu);
}

double radial_kernel_main(int n, double x) {
  const double nu = 0.5 * (n - 2);
  return std::pow(x, -nu) * std::sqrt(2.0 / (kPi * x)) * std::cos(x - (n - 1) * kPi / 4.0);
}

BesselBoundReport bessel_bound_check(double nu, const std::vector<double>& r_grid, double bound) {
  BesselBoundReport rep;
  rep.nu = nu;
  rep.bound = bound;
  for (double r : r_grid) {
    if (!(r > 0.0)) throw Error(ErrorKind::NonPositiveSample, "grid point r = " + std::to_string(r));
    const double j = std::abs(bessel_j(nu, r));
    rep.sup_small = std::max(rep.sup_small, j / std::pow(r, nu));
    rep.sup_large = std::max(rep.sup_large, j * std::sqrt(r));
  }
  rep.pass = std::isfinite(rep.sup_small) && std::isfinite(rep.sup_large) &&
             rep.sup_small <= bound && rep.sup_large <= bound;
  return rep;
}

double BesselSplit::kernel() const {
  const std::complex<double> e(std::cos(r), std::sin(r));
  const std::complex<double> total = (main_plus + e_plus) * e + (main_minus + e_minus) * std::conj(e);
  return total.real();
}

double BesselSplit::bessel() const { return kernel() * std::pow(r, 0.5 * (n - 2)); }

BesselSplit bessel_asymptotic_split(int n, double r) {
  if (n < 2) throw Error(ErrorKind::DomainError, "dimension must be at least 2");
  if (!(r >= 1.0)) throw Error(ErrorKind::SmallArgument, "asymptotic split needs r >= 1, got " + std::to_string(r));
  BesselSplit s;
  s.n = n;
  s.r = r;
  const double amp = std::pow(r, -0.5 * (n - 1)) * std::sqrt(2.0 / kPi) * 0.5;
  s.main_plus = std::polar(amp, -(n - 1) * kPi / 4.0);
  s.main_minus = std::conj(s.main_plus);
  const double remainder = radial_kernel(n, r) - radial_kernel_main(n, r);
  const std::complex<double> e(std::cos(r), std::sin(r));
  s.e_plus = 0.5 * remainder * std::conj(e);
  s.e_minus = 0.5 * remainder * e;
  return s;
}

double remainder_decay_constant(int n, const std::vector<double>& r_grid) {
  double c = 0.0;
  for (double r : r_grid) {
    const BesselSplit s = bessel_asymptotic_split(n, r);
    const double w = std::pow(r, 0.5 * (n + 1));
    c = std::max({c, std::abs(s.e_plus) * w, std::abs(s.e_minus) * w});
  }
  return c;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (count < 2) return {lo};
  std::vector<double> g(count);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < count; ++i) g[i] = std::exp(a + (b - a) * i / (count - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace rsl
