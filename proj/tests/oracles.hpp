#pragma once

// Test-side reference computations. Nothing here calls into the library.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;

inline constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kZeta4 = std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi / 90.0;
inline constexpr double kZeta5 = 1.0369277551433699263;

// sum_{m < M} f(m) + int_M^inf f + f(M)/2 for f(x) = (x+a)^{-s}(x+b)^{-t}.
inline cplx direct_pair_sum(int s, int t, cplx a, cplx b, long big_m = 1000000) {
  auto f = [&](double x) { return std::pow(x + a, -s) * std::pow(x + b, -t); };
  cplx sum = 0.0;
  for (long m = big_m - 1; m >= 0; --m) sum += f(static_cast<double>(m));
  const double x = static_cast<double>(big_m);
  // Integral tail for s + t >= 2 from the leading power, plus the endpoint half-term.
  const cplx c = x + 0.5 * (a + b);
  const cplx integral = std::pow(c, 1.0 - (s + t)) / static_cast<double>(s + t - 1);
  return sum + integral + 0.5 * f(x);
}

inline cplx direct_hurwitz(int s, cplx a, long big_m = 1000000) { return direct_pair_sum(s, 0, a, a, big_m); }

inline cplx central_difference(const std::function<cplx(cplx)>& f, cplx x, double h = 1e-4) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline cplx central_second_difference(const std::function<cplx(cplx)>& f, cplx x, double h = 1e-3) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// (a)_m
inline cplx pochhammer(cplx a, int m) {
  cplx p = 1.0;
  for (int i = 0; i < m; ++i) p *= a + static_cast<double>(i);
  return p;
}

}  // namespace oracle
