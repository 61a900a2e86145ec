#pragma once

#include <functional>
#include <vector>

namespace rsl {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Gauss-Legendre rule of the given order; rules are cached.
const GaussRule& gauss_legendre(int order);

struct NodeSet {
  std::vector<double> x;
  std::vector<double> w;
  std::size_t size() const { return x.size(); }
};

// Appends `panels` equal Gauss-Legendre panels covering [a, b].
void append_panels(NodeSet& out, double a, double b, int panels, int order);

NodeSet composite_gauss(double a, double b, int panels, int order);

// Panels no longer than max_len; panel edges include every edge in `breaks`
// that falls strictly inside (a, b).
NodeSet composite_gauss_with_breaks(double a, double b, double max_len, int order,
                                    const std::vector<double>& breaks);

// Integral of f over [a, b] on panels refined geometrically toward the
// endpoints flagged as singular. Suitable for integrable power singularities.
double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        bool singular_left, bool singular_right, int levels = 40,
                        int order = 12);

}  // namespace rsl
