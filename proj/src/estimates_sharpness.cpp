#include <algorithm>
#include <cmath>
#include <numbers>

#include "rsl/error.hpp"
#include "rsl/estimates.hpp"
#include "rsl/parallel.hpp"
#include "rsl/quadrature.hpp"

namespace rsl {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss nodes on [a, b] with panels short enough that a phase of the given
// rate turns by at most pi/2 per panel.
NodeSet phase_resolved(double a, double b, double rate, int order = 8) {
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) * rate / (kPi / 2.0))));
  return composite_gauss(a, b, panels, order);
}

}  // namespace

GrowthReport counterexample_wave(int n, double q, const std::vector<double>& Rs,
                                 const WaveCounterOptions& options) {
  if (n < 2 || !(q >= 1.0) || Rs.size() < 2)
    throw Error(ErrorKind::ParameterViolation, "wave counterexample needs n >= 2, q >= 1 and two or more radii");
  if (!(options.spacing > 0.0) || !(options.time_margin > 0.0))
    throw Error(ErrorKind::ParameterViolation, "wave counterexample needs positive spacing and margin");
  std::vector<double> radii = Rs;
  if (!std::is_sorted(radii.begin(), radii.end()) || radii.front() <= 2.0)
    throw Error(ErrorKind::ParameterViolation, "radii must increase and exceed 2");
  const double critical = 2.0 * n / (n - 1.0);
  const double h = options.spacing;
  const double beta = (n - 1) * kPi / 4.0;
  const double weight_power = (n - 1) / q - (n - 1) / 2.0;
  // I(tau) = int psi_0(s) h(s) e^{i tau s} ds with h = 1 on [0, 10], on the
  // lattice tau = m h. I is negligible beyond the time margin, so only
  // |tau| <= 3 margin is tabulated.
  const double R_max = radii.back();
  const auto t_margin = static_cast<std::ptrdiff_t>(std::ceil(options.time_margin / h));
  const std::ptrdiff_t m_max = 3 * t_margin;
  std::vector<Complex> I(static_cast<std::size_t>(2 * m_max + 1));
  parallel_for(I.size(), [&](std::size_t idx) {
    const double tau = (static_cast<double>(idx) - static_cast<double>(m_max)) * h;
    const NodeSet s = phase_resolved(0.5, 2.0, std::abs(tau) + 1.0);
    Complex sum{};
    for (std::size_t l = 0; l < s.size(); ++l) sum += dyadic_cutoff(0, s.x[l]) * std::polar(s.w[l], tau * s.x[l]);
    I[idx] = sum;
  });
  auto I_at = [&](std::ptrdiff_t m) -> Complex {
    if (m < -m_max || m > m_max) return {};
    return I[static_cast<std::size_t>(m + m_max)];
  };
  const Complex rot_minus = std::polar(0.5, -beta), rot_plus = std::polar(0.5, beta);
  // r on the lattice from 2 to R_max; the time integral of |G|^q per r node
  // over the windows |t + r|, |t - r| <= margin
  const auto r0 = static_cast<std::ptrdiff_t>(std::ceil(2.0 / h));
  const auto r1 = static_cast<std::ptrdiff_t>(std::floor(R_max / h));
  std::vector<double> per_r(static_cast<std::size_t>(r1 - r0 + 1), 0.0);
  parallel_for(per_r.size(), [&](std::size_t i) {
    const std::ptrdiff_t mr = r0 + static_cast<std::ptrdiff_t>(i);
    const double r = static_cast<double>(mr) * h;
    auto term = [&](std::ptrdiff_t mt) {
      return std::pow(std::abs(rot_minus * I_at(mt + mr) + rot_plus * I_at(mt - mr)), q);
    };
    double sum = 0.0;
    if (mr <= t_margin) {
      for (std::ptrdiff_t mt = -mr - t_margin; mt <= mr + t_margin; ++mt) sum += term(mt);
    } else {
      for (std::ptrdiff_t d = -t_margin; d <= t_margin; ++d) sum += term(-mr + d) + term(mr + d);
    }
    per_r[i] = sum * h * std::pow(r, weight_power * q);
  });
  GrowthReport rep;
  rep.x = radii;
  double acc = 0.0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < per_r.size() && next < radii.size(); ++i) {
    const double r = static_cast<double>(r0 + static_cast<std::ptrdiff_t>(i)) * h;
    if (r > radii[next]) {
      rep.values.push_back(std::pow(acc, 1.0 / q));
      ++next;
    }
    // trapezoid in r: half weight at the first node
    acc += (i == 0 ? 0.5 : 1.0) * per_r[i] * h;
  }
  while (rep.values.size() < radii.size()) rep.values.push_back(std::pow(acc, 1.0 / q));
  rep.monotone = true;
  for (std::size_t i = 1; i < rep.values.size(); ++i) {
    rep.increments.push_back(rep.values[i] / rep.values[i - 1] - 1.0);
    rep.monotone = rep.monotone && rep.values[i] > rep.values[i - 1];
  }
  rep.saturated = rep.increments.back() <= options.tol;
  std::vector<double> loglog;
  for (double R : radii) loglog.push_back(std::log2(std::log2(R)));
  // at the critical exponent the q-th power grows like log R
  rep.fit = fit_log2(loglog, rep.values, q <= critical + 1e-12 ? 1.0 / q : 0.0);
  if (q <= critical + 1e-12) rep.pass = rep.monotone && !rep.saturated && rep.fit.slope > 0.0;
  else rep.pass = rep.saturated;
  return rep;
}

namespace {

double schrodinger_counter_norm(int n, double q, int j, int grid_points) {
  const double delta = std::ldexp(1.0, -j);
  const double r_lo = std::ldexp(1.0, 2 * j), r_hi = std::ldexp(1.0, 2 * j + 1);
  const double d_max = std::ldexp(1.0, j);
  const double beta = (n - 1) * kPi / 4.0;
  const double amp = std::sqrt(std::ldexp(1.0, j));
  const double weight_power = (n - 1) / q - (n - 1) / 2.0;
  const NodeSet rn = composite_gauss(r_lo, r_hi, 1, grid_points);
  const NodeSet dn = composite_gauss(-d_max, d_max, 1, grid_points);
  std::vector<double> row(rn.size(), 0.0);
  parallel_for(rn.size(), [&](std::size_t i) {
    const double r = rn.x[i];
    double sum = 0.0;
    for (std::size_t l = 0; l < dn.size(); ++l) {
      const double t = 0.5 * (r + dn.x[l]);
      // e^{-i(rs - beta)} e^{its^2}: slowly varying near s = r / 2t
      const NodeSet s_minus = phase_resolved(1.0 - delta, 1.0 + delta, std::abs(2.0 * t - r) + 2.0 * t * delta + 1.0);
      // e^{+i(rs - beta)} e^{its^2}: fast, rate r + 2ts
      const NodeSet s_plus = phase_resolved(1.0 - delta, 1.0 + delta, r + 2.0 * t * (1.0 + delta));
      Complex minus{}, plus{};
      // carrier e^{i(t - r)} removed from the slow term
      for (std::size_t m = 0; m < s_minus.size(); ++m) {
        const double sig = s_minus.x[m] - 1.0;
        minus += dyadic_cutoff(0, s_minus.x[m]) * std::polar(s_minus.w[m], sig * (2.0 * t - r) + t * sig * sig);
      }
      for (std::size_t m = 0; m < s_plus.size(); ++m) {
        const double s = s_plus.x[m];
        plus += dyadic_cutoff(0, s) * std::polar(s_plus.w[m], r * s + t * s * s);
      }
      const Complex value = 0.5 * amp * (std::polar(1.0, beta + t - r) * minus + std::polar(1.0, -beta) * plus);
      sum += std::pow(std::abs(value), q) * 0.5 * dn.w[l];
    }
    row[i] = sum * std::pow(r, weight_power * q) * rn.w[i];
  });
  double total = 0.0;
  for (double v : row) total += v;
  return std::pow(total, 1.0 / q);
}

}  // namespace

SchrodingerCounterResult counterexample_schrodinger(int n, double q, const std::vector<int>& js, int grid_points) {
  if (n < 2 || !(q >= 1.0) || js.size() < 2 || grid_points < 4)
    throw Error(ErrorKind::ParameterViolation, "Schrodinger counterexample needs n >= 2, q >= 1, two or more j, grid >= 4");
  SchrodingerCounterResult res;
  res.predicted = (2.0 * n + 1.0) / q - (2.0 * n - 1.0) / 2.0;
  for (int j : js) res.norms.push_back(schrodinger_counter_norm(n, q, j, grid_points));
  std::vector<double> idx(js.begin(), js.end());
  res.fit = fit_log2(idx, res.norms, res.predicted);
  const double endpoint = (4.0 * n + 2.0) / (2.0 * n - 1.0);
  const double slope = res.fit.slope;
  if (std::abs(q - endpoint) <= 1e-9) res.pass = std::abs(slope) <= 0.05;
  else if (q < endpoint) res.pass = slope >= res.predicted - 0.05 && slope > 0.0;
  else res.pass = std::abs(slope - res.predicted) <= 0.05;
  return res;
}

GrowthReport knapp_fractional(double sigma, const std::vector<double>& deltas, double q, double r,
                              int region_points, int tube_points, double c) {
  if (!(sigma > 0.0) || sigma == 1.0)
    throw Error(ErrorKind::ParameterViolation, "Knapp probe needs sigma > 0, sigma != 1");
  if (deltas.size() < 2 || region_points < 2 || tube_points < 2 || !(c > 0.0))
    throw Error(ErrorKind::ParameterViolation, "Knapp probe needs two or more deltas and positive grid sizes");
  if (!(q >= 1.0) || !(r >= 1.0)) throw Error(ErrorKind::ParameterViolation, "Knapp probe needs q, r >= 1");
  GrowthReport rep;
  rep.x = deltas;
  rep.min_ratio = HUGE_VAL;
  rep.max_ratio = 0.0;
  const int tp = tube_points, rp = region_points;
  for (double delta : deltas) {
    if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorKind::ParameterViolation, "delta must lie in (0, 1)");
    // tube D = (1 + delta a, delta b), a, b in [-1, 1], midpoint rule
    std::vector<double> ta, tb, excess;
    for (int i = 0; i < tp; ++i) {
      for (int l = 0; l < tp; ++l) {
        const double a = -1.0 + (2.0 * i + 1.0) / tp, b = -1.0 + (2.0 * l + 1.0) / tp;
        const double x1 = 1.0 + delta * a, x2 = delta * b;
        ta.push_back(a);
        tb.push_back(b);
        // |xi|^sigma - 1 - sigma delta a, the part not absorbed by the shear
        excess.push_back(std::pow(x1 * x1 + x2 * x2, 0.5 * sigma) - 1.0 - sigma * delta * a);
      }
    }
    const double cell = (2.0 * delta / tp) * (2.0 * delta / tp);
    const double area = 4.0 * delta * delta;
    const double T = c / (delta * delta), X = c / delta;
    const double dt = 2.0 * T / rp, dx = 2.0 * X / rp;
    std::vector<double> slab(static_cast<std::size_t>(rp), 0.0);
    std::vector<double> lo(static_cast<std::size_t>(rp), HUGE_VAL), hi(static_cast<std::size_t>(rp), 0.0);
    parallel_for(static_cast<std::size_t>(rp), [&](std::size_t it) {
      const double t = -T + (static_cast<double>(it) + 0.5) * dt;
      double inner = 0.0, mx = 0.0;
      for (int iy = 0; iy < rp; ++iy) {
        // y = x_1 + sigma t
        const double y = -X + (iy + 0.5) * dx;
        for (int iz = 0; iz < rp; ++iz) {
          const double z = -X + (iz + 0.5) * dx;
          Complex u{};
          for (std::size_t m = 0; m < ta.size(); ++m)
            u += std::polar(1.0, delta * ta[m] * y + delta * tb[m] * z + t * excess[m]);
          const double mag = std::abs(u) * cell;
          lo[it] = std::min(lo[it], mag / area);
          hi[it] = std::max(hi[it], mag / area);
          mx = std::max(mx, mag);
          if (!std::isinf(r)) inner += std::pow(mag, r) * dx * dx;
        }
      }
      slab[it] = std::isinf(r) ? mx : std::pow(inner, 1.0 / r);
    });
    double norm = 0.0;
    if (std::isinf(q)) {
      norm = *std::max_element(slab.begin(), slab.end());
    } else {
      for (double v : slab) norm += std::pow(v, q) * dt;
      norm = std::pow(norm, 1.0 / q);
    }
    rep.values.push_back(norm / std::sqrt(area));
    rep.min_ratio = std::min(rep.min_ratio, *std::min_element(lo.begin(), lo.end()));
    rep.max_ratio = std::max(rep.max_ratio, *std::max_element(hi.begin(), hi.end()));
  }
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q, inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
  const double predicted = -(2.0 * inv_q + 2.0 * inv_r - 1.0);
  std::vector<double> logd;
  for (double d : deltas) logd.push_back(std::log2(d));
  rep.fit = fit_log2(logd, rep.values, predicted);
  rep.monotone = true;
  for (std::size_t i = 1; i < rep.values.size(); ++i) {
    rep.increments.push_back(rep.values[i] / rep.values[i - 1] - 1.0);
    rep.monotone = rep.monotone && rep.values[i] >= rep.values[i - 1];
  }
  rep.saturated = false;
  rep.pass = std::abs(rep.fit.slope - predicted) <= 0.1 && rep.min_ratio > 0.1;
  return rep;
}

}  // namespace rsl
