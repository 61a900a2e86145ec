#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "rsl/propagator.hpp"

namespace rsl {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RadialRegion {
  enum class Kind { all, annulus, tail };
  Kind kind = Kind::all;
  int j = 0;        // annulus [2^{j-1}, 2^j)
  double R = 0.0;   // tail r >= R

  static RadialRegion everywhere() { return {}; }
  static RadialRegion shell(int j) { return {Kind::annulus, j, 0.0}; }
  static RadialRegion beyond(double R) { return {Kind::tail, 0, R}; }
  bool contains(double r) const;
};

struct MixedNormSpec {
  double q = 2.0;
  double r = 2.0;
  std::optional<std::pair<double, double>> time_window;
  RadialRegion region;

  void validate() const;
};

// (int (int_Omega |F|^r omega_n r^{n-1} dr)^{q/r} dt)^{1/q}; infinite exponents
// are grid suprema.
double mixed_norm(const SpaceTimeField& field, const MixedNormSpec& spec);

// int (int_Omega ...)^{q/r} dt for finite q, i.e. mixed_norm^q.
double mixed_norm_power(const SpaceTimeField& field, const MixedNormSpec& spec);

// (omega_n int s^{2 sigma} |h|^2 s^{n-1} ds)^{1/2}.
double sobolev_norm(const RadialProfile& profile, double sigma);

// Field restricted to times t_lo <= |t| <= t_hi.
using SlabGenerator = std::function<SpaceTimeField(double t_lo, double t_hi)>;

struct WindowResult {
  double T = 0.0;
  double norm = 0.0;
  bool converged = false;
  double tail = 0.0;  // extrapolated q-th power beyond T
  double measured = 0.0;  // norm over [0, T] alone
  std::vector<double> windows;
  std::vector<double> norms;
};

// Doubles the window T0, 2 T0, 4 T0, ... accumulating the q-th power slab by
// slab until the last doubling changes the norm by at most tol * norm.
//
// With extrapolation the slab powers are continued geometrically with the
// ratio of the last two slabs, which is exact for power-law decay in time.
// Convergence then needs a ratio below max_ratio and a stable extrapolated
// norm.
WindowResult adaptive_window(const SlabGenerator& slab, const MixedNormSpec& spec, double T0,
                             double tol, int max_doublings = 12, bool extrapolate = false,
                             double max_ratio = 0.9);

}  // namespace rsl
