#pragma once

#include <cmath>
#include <complex>

namespace ohno::detail {

// Compensated summation, applied to real and imaginary parts separately.
class NeumaierSum {
 public:
  void add(std::complex<double> x) {
    add_part(re_, re_comp_, x.real());
    add_part(im_, im_comp_, x.imag());
  }
  std::complex<double> value() const { return {re_ + re_comp_, im_ + im_comp_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, re_comp_ = 0.0, im_ = 0.0, im_comp_ = 0.0;
};

inline std::complex<double> pow_int(std::complex<double> base, int exponent) {
  std::complex<double> result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace ohno::detail
