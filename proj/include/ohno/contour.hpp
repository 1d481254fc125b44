#pragma once

// Derivatives of holomorphic functions by the trapezoid rule on a circle
// (Cauchy's integral formula).

#include <functional>

#include "ohno/series.hpp"

namespace ohno {

struct ContourSpec {
  cplx center;
  double radius = 0.0;
  int points = 64;

  /// Contour around a parameter that must keep a positive real part: radius
  /// defaults to Re(center)/4 and must stay below Re(center). RadiusDomain otherwise.
  static ContourSpec around_parameter(cplx center, double radius = 0.0, int points = 64);

  /// RadiusDomain unless radius > 0, points >= 16 and 0 <= order <= points/4.
  void validate(int order) const;
};

/// d^order f / dz^order at c.center (not divided by order!).
cplx contour_derivative(const std::function<cplx(cplx)>& f, const ContourSpec& c, int order);

/// d^{m+n} f / dx^m dy^n at (outer.center, inner.center); the inner contour
/// runs in the second argument.
cplx contour_mixed_partial(const std::function<cplx(cplx, cplx)>& f, const ContourSpec& outer,
                           const ContourSpec& inner, int m, int n);

}  // namespace ohno
