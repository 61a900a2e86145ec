#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rsl/dispersion.hpp"
#include "rsl/radial_transform.hpp"

namespace rsl {

enum class FieldSource { direct, main_term, error_term, oracle, duhamel };
const char* to_string(FieldSource source);

// Complex samples F(t_i, r_j), stored t-major. Norms use the measure
// omega_n r^{n-1} dr dt.
struct SpaceTimeField {
  PhysicalGrid grid;
  std::vector<Complex> values;
  int n = 2;
  FieldSource source = FieldSource::direct;

  Complex& at(std::size_t i, std::size_t j) { return values[i * grid.nr() + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return values[i * grid.nr() + j]; }
  void validate() const;
};

// e^{it phi(s)} h(s), the frequency-side free evolution.
RadialProfile advance(const DispersionSymbol& symbol, const RadialProfile& profile, double t);

// S(t) P_k u0 on the grid: F(t,r) = int e^{it phi(s)} psi_k(s) h(s) s^{n-1} K_n(sr) ds.
SpaceTimeField evolve(const DispersionSymbol& symbol, const RadialProfile& profile, int k,
                      const PhysicalGrid& grid, const QuadraturePolicy& policy = {});
// Same without the dyadic projection; integrates over the profile's support.
SpaceTimeField evolve(const DispersionSymbol& symbol, const RadialProfile& profile,
                      const PhysicalGrid& grid, const QuadraturePolicy& policy = {});

// F = M + E where M uses the leading large-argument form of the kernel and E
// the remainder. Requires s r >= 1 over the whole integration range.
std::pair<SpaceTimeField, SpaceTimeField> main_error_split(const DispersionSymbol& symbol,
                                                          const RadialProfile& profile, int k,
                                                          const PhysicalGrid& grid,
                                                          const QuadraturePolicy& policy = {});

// cos(t sqrt(-Delta)) g in R^3 for radial g, by d'Alembert on r g(r).
double oracle_wave_cosine_3d(const std::function<double(double)>& g, double t, double r);

// Closed form of the Schrodinger evolution of h(s) = exp(-s^2/2) under the
// unitary convention: (1-2it)^{-n/2} exp(-r^2 / (2(1-2it))).
Complex oracle_gaussian_schrodinger(int n, double t, double r);

// Frequency-side forcing f^(t, sigma).
using Forcing = std::function<Complex(double t, double sigma)>;

// Weights of the exact exponential integral over one step of length h with
// f linear in time: int_0^h e^{-i omega tau} f(tau) dtau = w0 f(0) + w1 f(h).
std::pair<Complex, Complex> exponential_step_weights(double omega, double h);

// Frequency coefficient -i int_0^t e^{i(t-tau) phi(sigma)} f^(tau, sigma) dtau on
// the given times (any order, may straddle 0), forcing linear between nodes.
// Returns a times x sigmas matrix, row-major.
std::vector<Complex> duhamel_coefficients(const DispersionSymbol& symbol, const Forcing& forcing,
                                          const std::vector<double>& times,
                                          const std::vector<double>& sigmas);

// int_0^t S(t-tau) P_k f(tau) dtau on the grid, with forcing sampled at the
// grid's time nodes (plus t = 0).
SpaceTimeField duhamel(const DispersionSymbol& symbol, const Forcing& forcing, int n, int k,
                       const PhysicalGrid& grid, const QuadraturePolicy& policy = {});

}  // namespace rsl
