#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "rsl/quadrature.hpp"

namespace rsl {

using Complex = std::complex<double>;
using ProfileSampler = std::function<Complex(double)>;

// Oscillatory quadrature control shared by every transform.
struct QuadraturePolicy {
  double max_phase_step = 0.78539816339744831;  // pi/4, radians per panel
  int panel_order = 4;
  int refinement_limit = 1 << 16;  // max subpanels per base panel
  int base_panels_per_octave = 32;

  void validate() const;
};

// Quadrature nodes for integrals in s. Grids built from Gauss panels keep the
// panel structure so values can be interpolated inside a panel.
struct FrequencyGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> panel_edges;  // empty for unstructured grids
  int order = 0;

  static FrequencyGrid gauss_panels(double lo, double hi, int panels, int order);
  // Panels of bounded width with edges at every power of two in range.
  static FrequencyGrid dyadic_panels(double lo, double hi, int panels_per_octave, int order);
  double lo() const;
  double hi() const;
  void validate() const;
};

// Frequency-side radial data h(s) in dimension n. When a sampler is present it
// is the exact definition of h and `values` are its samples on the grid;
// otherwise h is the piecewise polynomial interpolant of `values`.
struct RadialProfile {
  FrequencyGrid grid;
  std::vector<Complex> values;
  int n = 2;
  double support_lo = 0.0;
  double support_hi = 0.0;
  ProfileSampler sampler;
  bool real = false;  // h is real valued, so F(-t) = conj F(t) for real phi

  Complex value_at(double s) const;
  bool is_real() const;
  void validate() const;
};

RadialProfile make_profile(int n, FrequencyGrid grid, ProfileSampler h, double support_lo,
                           double support_hi, bool real = false);
RadialProfile make_profile(int n, FrequencyGrid grid, std::vector<Complex> values);

// The fixed bump: 1 on [0,1], 0 beyond 2, smooth transition
// 1 - S(x-1) with S(x) = e^{-1/x} / (e^{-1/x} + e^{-1/(1-x)}).
double smooth_step(double x);
double bump(double x);
// psi(2^{-k} s) with psi(x) = bump(x) - bump(2x); supported in [2^{k-1}, 2^{k+1}].
double dyadic_cutoff(int k, double s);

RadialProfile project(const RadialProfile& profile, int k);

// Surface area of the unit sphere in R^n.
double sphere_area(int n);

// (omega_n int |h|^2 s^{n-1} ds)^{1/2}; equals the physical L^2 norm.
double l2_norm(const RadialProfile& profile);

// Unitary radial transform F(r) = int h(s) s^{n-1} K_n(sr) ds with
// K_n(x) = x^{-(n-2)/2} J_{(n-2)/2}(x). It is its own inverse.
Complex fourier_bessel(const RadialProfile& profile, double r,
                       const QuadraturePolicy& policy = {});

// Transform of physical samples F(r_i) on the given nodes back to h(s).
Complex inverse_fourier_bessel(int n, const NodeSet& r_nodes, const std::vector<Complex>& values,
                               double s);

// Quadrature nodes for the profile's support, refined so that every panel
// satisfies width * rate <= max_phase_step.
NodeSet oscillatory_nodes(const RadialProfile& profile, double rate,
                          const QuadraturePolicy& policy);
NodeSet oscillatory_nodes(double lo, double hi, double rate, const QuadraturePolicy& policy);

// Space-time sample grid. r panels are aligned to powers of two so every
// annulus [2^{j-1}, 2^j) is integrated exactly by a subset of the nodes.
struct PhysicalGrid {
  std::vector<double> t;
  std::vector<double> t_weights;
  std::vector<double> r;
  std::vector<double> r_weights;
  std::vector<int> annulus;
  double t_lo = 0.0, t_hi = 0.0;
  double r_lo = 0.0, r_hi = 0.0;

  std::size_t nt() const { return t.size(); }
  std::size_t nr() const { return r.size(); }
};

int annulus_of(double r);
PhysicalGrid make_physical_grid(const NodeSet& t, double t_lo, double t_hi, const NodeSet& r,
                                double r_lo, double r_hi);
// Gauss nodes on [lo, hi] with panels no longer than max_panel and panel
// edges at each power of two inside (lo, hi).
NodeSet radial_nodes(double lo, double hi, double max_panel, int order);
NodeSet time_nodes(double lo, double hi, double max_panel, int order);
// Time nodes on [-hi, -lo] and [lo, hi] (or [-hi, hi] when lo == 0).
NodeSet symmetric_time_nodes(double lo, double hi, double max_panel, int order);

}  // namespace rsl
