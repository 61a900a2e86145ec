#pragma once

#include <complex>
#include <vector>

namespace rsl {

// Bessel function of the first kind, real order nu >= -1/2, argument x >= 0.
double bessel_j(double nu, double x);

// x^{-nu} J_nu(x) with nu = (n-2)/2; finite at x = 0.
double radial_kernel(int n, double x);

// Leading oscillatory part of radial_kernel for large x:
// x^{-nu} sqrt(2/(pi x)) cos(x - (n-1) pi/4).
double radial_kernel_main(int n, double x);

struct BesselBoundReport {
  double nu = 0.0;
  double sup_small = 0.0;  // sup |J_nu(r)| / r^nu
  double sup_large = 0.0;  // sup |J_nu(r)| r^{1/2}
  double bound = 0.0;
  bool pass = false;
};

BesselBoundReport bessel_bound_check(double nu, const std::vector<double>& r_grid,
                                     double bound = 1.1);

// Split of the radial kernel for r >= 1:
//   r^{-nu} J_nu(r) = main_plus e^{ir} + main_minus e^{-ir} + e^{ir} e_plus + e^{-ir} e_minus
// with main_plus = conj(main_minus) = r^{-(n-1)/2} sqrt(2/pi) e^{-i(n-1)pi/4} / 2.
struct BesselSplit {
  int n = 2;
  double r = 1.0;
  std::complex<double> main_plus;
  std::complex<double> main_minus;
  std::complex<double> e_plus;
  std::complex<double> e_minus;

  double kernel() const;  // reassembled r^{-nu} J_nu(r)
  double bessel() const;  // reassembled J_nu(r)
};

BesselSplit bessel_asymptotic_split(int n, double r);

// max over the grid of |E_pm(r)| r^{(n+1)/2}.
double remainder_decay_constant(int n, const std::vector<double>& r_grid);

std::vector<double> log_grid(double lo, double hi, int count);

}  // namespace rsl
