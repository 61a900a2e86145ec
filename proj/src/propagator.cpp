#include "rsl/propagator.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "rsl/error.hpp"
#include "rsl/parallel.hpp"
#include "rsl/special_functions.hpp"

namespace rsl {

const char* to_string(FieldSource source) {
  switch (source) {
    case FieldSource::direct: return "direct";
    case FieldSource::main_term: return "main_term";
    case FieldSource::error_term: return "error_term";
    case FieldSource::oracle: return "oracle";
    case FieldSource::duhamel: return "duhamel";
  }
  return "unknown";
}

void SpaceTimeField::validate() const {
  if (values.size() != grid.nt() * grid.nr()) throw Error(ErrorKind::DomainError, "field size does not match grid");
  for (const auto& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw Error(ErrorKind::DomainError, "field has non-finite values");
}

RadialProfile advance(const DispersionSymbol& symbol, const RadialProfile& profile, double t) {
  RadialProfile out = profile;
  out.real = false;
  auto phase = [phi = symbol.phi, t](double s) { return std::polar(1.0, t * phi(s)); };
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= phase(out.grid.nodes[i]);
  out.sampler = [parent = profile, phase](double s) { return parent.value_at(s) * phase(s); };
  return out;
}

namespace {

enum class KernelPart { full, main, remainder };

constexpr std::size_t kBlock = 512;
constexpr std::size_t kSChunk = 4096;

double kernel_value(KernelPart part, int n, double x) {
  switch (part) {
    case KernelPart::full: return radial_kernel(n, x);
    case KernelPart::main: return radial_kernel_main(n, x);
    case KernelPart::remainder: return radial_kernel(n, x) - radial_kernel_main(n, x);
  }
  return 0.0;
}

double sup_abs_dphi(const DispersionSymbol& symbol, double lo, double hi) {
  double m = 0.0;
  const int samples = 512;
  for (int i = 0; i <= samples; ++i) {
    const double s = lo + (hi - lo) * i / samples;
    if (s > 0.0) m = std::max(m, std::abs(symbol.dphi(s)));
  }
  return m;
}

// Partition of the time indices: rows to compute, and rows obtained by
// conjugating a computed row at -t (valid for real data and t-independent
// coefficients).
struct TimePlan {
  std::vector<std::size_t> compute;  // sorted by |t|
  std::vector<std::pair<std::size_t, std::size_t>> mirror;  // (target, source)
};

TimePlan plan_times(const std::vector<double>& t, bool allow_mirror) {
  TimePlan plan;
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });
  std::vector<bool> done(t.size(), false);
  if (allow_mirror) {
    const double scale = t.empty() ? 0.0 : std::max(std::abs(t[order.front()]), std::abs(t[order.back()]));
    const double tol = 1e-12 * std::max(scale, 1e-300);
    for (std::size_t idx : order) {
      if (t[idx] >= 0.0) continue;
      auto it = std::lower_bound(order.begin(), order.end(), -t[idx] - tol,
                                 [&](std::size_t a, double v) { return t[a] < v; });
      if (it != order.end() && std::abs(t[*it] + t[idx]) <= tol && t[*it] > 0.0) {
        plan.mirror.emplace_back(idx, *it);
        done[idx] = true;
      }
    }
  }
  for (std::size_t idx = 0; idx < t.size(); ++idx)
    if (!done[idx]) plan.compute.push_back(idx);
  std::stable_sort(plan.compute.begin(), plan.compute.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(t[a]) < std::abs(t[b]); });
  return plan;
}

// Builds the coefficient matrix rows for a block: A(i,l) = e^{it_i phi(s_l)} c(s_l) w_l.
using RowFiller = std::function<void(const std::vector<std::size_t>& rows, const NodeSet& nodes,
                                     std::size_t s_begin, std::size_t s_end, Eigen::MatrixXd& re,
                                     Eigen::MatrixXd& im)>;

// Core of every transform: F(t_i, r_j) = sum_l A(i,l) kernel(s_l r_j).
void assemble(SpaceTimeField& field, const TimePlan& plan, const RowFiller& fill,
              const std::function<NodeSet(double tmax, double rmax)>& node_source, KernelPart part) {
  const PhysicalGrid& g = field.grid;
  const std::size_t nr = g.nr();
  const std::size_t t_blocks = (plan.compute.size() + kBlock - 1) / kBlock;
  const std::size_t r_blocks = (nr + kBlock - 1) / kBlock;
  const int n = field.n;
  parallel_for(t_blocks * r_blocks, [&](std::size_t job) {
    const std::size_t tb = job / r_blocks, rb = job % r_blocks;
    const std::size_t t0 = tb * kBlock, t1 = std::min(plan.compute.size(), t0 + kBlock);
    const std::size_t r0 = rb * kBlock, r1 = std::min(nr, r0 + kBlock);
    std::vector<std::size_t> rows(plan.compute.begin() + t0, plan.compute.begin() + t1);
    double tmax = 0.0, rmax = 0.0;
    for (std::size_t i : rows) tmax = std::max(tmax, std::abs(g.t[i]));
    for (std::size_t j = r0; j < r1; ++j) rmax = std::max(rmax, g.r[j]);
    const NodeSet nodes = node_source(tmax, rmax);
    const std::size_t bt = rows.size(), br = r1 - r0;
    Eigen::MatrixXd acc_re = Eigen::MatrixXd::Zero(bt, br), acc_im = Eigen::MatrixXd::Zero(bt, br);
    Eigen::MatrixXd a_re, a_im, b;
    for (std::size_t s0 = 0; s0 < nodes.size(); s0 += kSChunk) {
      const std::size_t s1 = std::min(nodes.size(), s0 + kSChunk);
      a_re.resize(bt, s1 - s0);
      a_im.resize(bt, s1 - s0);
      fill(rows, nodes, s0, s1, a_re, a_im);
      b.resize(s1 - s0, br);
      for (std::size_t jj = 0; jj < br; ++jj) {
        const double r = g.r[r0 + jj];
        for (std::size_t l = s0; l < s1; ++l) b(l - s0, jj) = kernel_value(part, n, nodes.x[l] * r);
      }
      acc_re.noalias() += a_re * b;
      acc_im.noalias() += a_im * b;
    }
    for (std::size_t ii = 0; ii < bt; ++ii)
      for (std::size_t jj = 0; jj < br; ++jj) field.at(rows[ii], r0 + jj) = Complex(acc_re(ii, jj), acc_im(ii, jj));
  });
  for (const auto& [target, source] : plan.mirror)
    for (std::size_t j = 0; j < nr; ++j) field.at(target, j) = std::conj(field.at(source, j));
}

SpaceTimeField evolve_part(const DispersionSymbol& symbol, const RadialProfile& profile,
                           const PhysicalGrid& grid, const QuadraturePolicy& policy, KernelPart part,
                           FieldSource source) {
  policy.validate();
  SpaceTimeField field;
  field.grid = grid;
  field.n = profile.n;
  field.source = source;
  field.values.assign(grid.nt() * grid.nr(), Complex{});
  if (grid.nt() == 0 || grid.nr() == 0 || !(profile.support_hi > profile.support_lo)) return field;
  const double slope = sup_abs_dphi(symbol, profile.support_lo, profile.support_hi);
  const TimePlan plan = plan_times(grid.t, profile.is_real());
  const int n = profile.n;
  auto node_source = [&](double tmax, double rmax) {
    return oscillatory_nodes(profile, tmax * slope + rmax, policy);
  };
  auto fill = [&](const std::vector<std::size_t>& rows, const NodeSet& nodes, std::size_t s0,
                  std::size_t s1, Eigen::MatrixXd& re, Eigen::MatrixXd& im) {
    for (std::size_t l = s0; l < s1; ++l) {
      const double s = nodes.x[l];
      const Complex c = profile.value_at(s) * (std::pow(s, n - 1) * nodes.w[l]);
      const double ph = symbol.phi(s);
      for (std::size_t ii = 0; ii < rows.size(); ++ii) {
        const Complex v = c * std::polar(1.0, grid.t[rows[ii]] * ph);
        re(ii, l - s0) = v.real();
        im(ii, l - s0) = v.imag();
      }
    }
  };
  assemble(field, plan, fill, node_source, part);
  return field;
}

}  // namespace

SpaceTimeField evolve(const DispersionSymbol& symbol, const RadialProfile& profile,
                      const PhysicalGrid& grid, const QuadraturePolicy& policy) {
  return evolve_part(symbol, profile, grid, policy, KernelPart::full, FieldSource::direct);
}

SpaceTimeField evolve(const DispersionSymbol& symbol, const RadialProfile& profile, int k,
                      const PhysicalGrid& grid, const QuadraturePolicy& policy) {
  return evolve(symbol, project(profile, k), grid, policy);
}

std::pair<SpaceTimeField, SpaceTimeField> main_error_split(const DispersionSymbol& symbol,
                                                          const RadialProfile& profile, int k,
                                                          const PhysicalGrid& grid,
                                                          const QuadraturePolicy& policy) {
  const RadialProfile band = project(profile, k);
  for (double r : grid.r)
    if (r * band.support_lo < 1.0)
      throw Error(ErrorKind::SplitDomainError,
                  "s r = " + std::to_string(r * band.support_lo) + " < 1 at r = " + std::to_string(r));
  return {evolve_part(symbol, band, grid, policy, KernelPart::main, FieldSource::main_term),
          evolve_part(symbol, band, grid, policy, KernelPart::remainder, FieldSource::error_term)};
}

double oracle_wave_cosine_3d(const std::function<double(double)>& g, double t, double r) {
  if (!(r > 0.0)) throw Error(ErrorKind::DomainError, "oracle needs r > 0");
  const double a = r + t, b = r - t;
  // r g(r) extended oddly, i.e. g extended evenly
  return (a * g(std::abs(a)) + b * g(std::abs(b))) / (2.0 * r);
}

Complex oracle_gaussian_schrodinger(int n, double t, double r) {
  const Complex z(1.0, -2.0 * t);
  return std::pow(z, -0.5 * n) * std::exp(-r * r / (2.0 * z));
}

std::pair<Complex, Complex> exponential_step_weights(double omega, double h) {
  const Complex z(0.0, -omega * h);  // -i omega h
  Complex e0, e1;
  if (std::abs(z) < 0.1) {
    Complex term = 1.0, s0{}, s1{};
    double fact = 1.0;  // m!
    for (int m = 0; m < 12; ++m) {
      if (m > 0) {
        term *= z;
        fact *= m;
      }
      s0 += term / (fact * (m + 1));
      s1 += term / (fact * (m + 2));
    }
    e0 = h * s0;
    e1 = h * h * s1;
  } else {
    const Complex io(0.0, omega);
    const Complex ez = std::exp(z);
    e0 = (1.0 - ez) / io;
    e1 = h * ez / (-io) + e0 / io;
  }
  return {e0 - e1 / h, e1 / h};
}

std::vector<Complex> duhamel_coefficients(const DispersionSymbol& symbol, const Forcing& forcing,
                                          const std::vector<double>& times,
                                          const std::vector<double>& sigmas) {
  const std::size_t nt = times.size(), ns = sigmas.size();
  std::vector<Complex> out(nt * ns);
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < nt; ++i) (times[i] >= 0.0 ? pos : neg).push_back(i);
  std::sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) { return times[a] < times[b]; });
  std::sort(neg.begin(), neg.end(), [&](std::size_t a, std::size_t b) { return times[a] > times[b]; });
  parallel_for(ns, [&](std::size_t l) {
    const double sigma = sigmas[l];
    const double omega = symbol.phi(sigma);
    for (const auto* side : {&pos, &neg}) {
      double prev_t = 0.0;
      Complex prev_f = forcing(0.0, sigma), v{};
      for (std::size_t idx : *side) {
        const double t = times[idx];
        const Complex f = forcing(t, sigma);
        if (t != prev_t) {
          const auto [w0, w1] = exponential_step_weights(omega, t - prev_t);
          v += std::polar(1.0, -prev_t * omega) * (w0 * prev_f + w1 * f);
        }
        out[idx * ns + l] = Complex(0.0, -1.0) * std::polar(1.0, t * omega) * v;
        prev_t = t;
        prev_f = f;
      }
    }
  });
  return out;
}

SpaceTimeField duhamel(const DispersionSymbol& symbol, const Forcing& forcing, int n, int k,
                       const PhysicalGrid& grid, const QuadraturePolicy& policy) {
  policy.validate();
  SpaceTimeField field;
  field.grid = grid;
  field.n = n;
  field.source = FieldSource::duhamel;
  field.values.assign(grid.nt() * grid.nr(), Complex{});
  if (grid.nt() == 0 || grid.nr() == 0) return field;
  const double lo = std::ldexp(1.0, k - 1), hi = std::ldexp(1.0, k + 1);
  double tmax = 0.0, rmax = 0.0;
  for (double t : grid.t) tmax = std::max(tmax, std::abs(t));
  for (double r : grid.r) rmax = std::max(rmax, r);
  const double slope = sup_abs_dphi(symbol, lo, hi);
  // the coefficient oscillates in sigma like e^{it phi} times a factor of
  // comparable bandwidth, hence the doubled time rate
  const NodeSet nodes = oscillatory_nodes(lo, hi, 2.0 * tmax * slope + rmax, policy);
  const std::vector<Complex> coef = duhamel_coefficients(symbol, forcing, grid.t, nodes.x);
  const std::size_t ns = nodes.size();
  TimePlan plan;
  for (std::size_t i = 0; i < grid.nt(); ++i) plan.compute.push_back(i);
  auto node_source = [&](double, double) { return nodes; };
  auto fill = [&](const std::vector<std::size_t>& rows, const NodeSet& nd, std::size_t s0, std::size_t s1,
                  Eigen::MatrixXd& re, Eigen::MatrixXd& im) {
    for (std::size_t l = s0; l < s1; ++l) {
      const double s = nd.x[l];
      const double c = dyadic_cutoff(k, s) * std::pow(s, n - 1) * nd.w[l];
      for (std::size_t ii = 0; ii < rows.size(); ++ii) {
        const Complex v = coef[rows[ii] * ns + l] * c;
        re(ii, l - s0) = v.real();
        im(ii, l - s0) = v.imag();
      }
    }
  };
  assemble(field, plan, fill, node_source, KernelPart::full);
  return field;
}

}  // namespace rsl
