#include "ohno/contour.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "ohno/errors.hpp"

namespace ohno {

ContourSpec ContourSpec::around_parameter(cplx center, double radius, int points) {
  if (!(center.real() > 0.0)) {
    throw Error(ErrorCode::RadiusDomain, "parameter contour needs Re(center) > 0");
  }
  ContourSpec c{center, radius > 0.0 ? radius : center.real() / 4.0, points};
  if (!(c.radius < center.real())) {
    throw Error(ErrorCode::RadiusDomain, "radius must stay below Re(center)");
  }
  return c;
}

void ContourSpec::validate(int order) const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::RadiusDomain, "contour radius must be positive");
  }
  if (points < 16) throw Error(ErrorCode::RadiusDomain, "contour needs at least 16 points");
  if (order < 0 || order > points / 4) {
    throw Error(ErrorCode::RadiusDomain, "derivative order must lie in [0, points/4]");
  }
}

namespace {

// Weights w_j with f^{(p)}(c) ~ sum_j w_j f(z_j).
void nodes_and_weights(const ContourSpec& c, int order, std::vector<cplx>& nodes,
                       std::vector<cplx>& weights) {
  c.validate(order);
  double factorial = 1.0;
  for (int i = 2; i <= order; ++i) factorial *= i;
  const double scale = factorial / (c.points * std::pow(c.radius, order));
  nodes.resize(static_cast<std::size_t>(c.points));
  weights.resize(static_cast<std::size_t>(c.points));
  for (int j = 0; j < c.points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / c.points;
    const cplx unit = std::polar(1.0, theta);
    nodes[static_cast<std::size_t>(j)] = c.center + c.radius * unit;
    weights[static_cast<std::size_t>(j)] = scale * std::polar(1.0, -order * theta);
  }
}

}  // namespace

cplx contour_derivative(const std::function<cplx(cplx)>& f, const ContourSpec& c, int order) {
  std::vector<cplx> nodes, weights;
  nodes_and_weights(c, order, nodes, weights);
  cplx total = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) total += weights[j] * f(nodes[j]);
  return total;
}

cplx contour_mixed_partial(const std::function<cplx(cplx, cplx)>& f, const ContourSpec& outer,
                           const ContourSpec& inner, int m, int n) {
  std::vector<cplx> inner_nodes, inner_weights;
  nodes_and_weights(inner, n, inner_nodes, inner_weights);
  auto partial_in_second = [&](cplx x) {
    cplx total = 0.0;
    for (std::size_t j = 0; j < inner_nodes.size(); ++j) total += inner_weights[j] * f(x, inner_nodes[j]);
    return total;
  };
  return contour_derivative(partial_in_second, outer, m);
}

}  // namespace ohno
