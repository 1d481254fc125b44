#include "ohno/split.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ohno/errors.hpp"

namespace ohno {

namespace {

// Smallest N with x^N * N^growth below ~1e-20.
int series_length(double x, double growth) {
  const double lx = -std::log(x);
  int n = 40;
  while (n < 4000 && n * lx - growth * std::log(static_cast<double>(n)) < 46.0) n += 4;
  return n;
}

double truncation_estimate(const std::vector<cplx>& coeff, const std::vector<cplx>& weight,
                           double ratio) {
  const std::size_t n = coeff.size();
  double last = 0.0;
  for (std::size_t m = n - 3; m < n; ++m) last = std::max(last, std::abs(coeff[m] * weight[m]));
  return 2.0 * last * ratio / (1.0 - ratio);
}

}  // namespace

std::vector<Letter> interior_letters(std::span<const int> parts) {
  std::vector<Letter> word;
  for (int part : parts) {
    word.push_back(Letter::U);
    word.insert(word.end(), static_cast<std::size_t>(part - 1), Letter::T);
  }
  // First letter belongs to the start form, last to the end form.
  return std::vector<Letter>(word.begin() + 1, word.end() - 1);
}

IteratedIntegralSplit::Side::Side(EndpointForm start, EndpointForm end, double x) : x_(x) {
  if (start.b.real() <= 0.0) {
    throw Error(ErrorCode::ParameterDomain, "start form exponent needs a positive real part");
  }
  const cplx end_shift = start.b - end.b + 1.0;
  if (end_shift.real() <= 0.0) {
    throw Error(ErrorCode::ParameterDomain, "end form is not integrable at the origin");
  }
  const int n = series_length(x, 6.0 + std::max(0.0, start.a.real()));
  ratio_ = std::min(0.95, 1.1 * x);

  start_coeff_.resize(static_cast<std::size_t>(n));
  inv_shift_.resize(static_cast<std::size_t>(n));
  basis_.resize(static_cast<std::size_t>(n));
  cplx pochhammer_ratio = 1.0;  // (a)_m / m!
  cplx power = std::pow(cplx(x, 0.0), start.b);
  for (int m = 0; m < n; ++m) {
    const auto i = static_cast<std::size_t>(m);
    inv_shift_[i] = 1.0 / (static_cast<double>(m) + start.b);
    start_coeff_[i] = pochhammer_ratio * inv_shift_[i];
    basis_[i] = power;
    pochhammer_ratio *= (start.a + static_cast<double>(m)) / static_cast<double>(m + 1);
    power *= x;
  }

  // J_m = int_0^x t^{m + s - 1} (1 - t)^{a_e - 1} dt with s = b_s - b_e + 1, as
  // basis_m * x^{1 - b_e} * sum_p (1 - a_e)_p / p! * x^p / (m + p + s).
  std::vector<cplx> binom_x;
  cplx bx = 1.0;
  for (int p = 0; p < 4 * n; ++p) {
    binom_x.push_back(bx);
    bx *= (1.0 - end.a + static_cast<double>(p)) / static_cast<double>(p + 1) * x;
    if (p > 8 && std::abs(bx) < 1e-24) break;
  }
  const cplx lead = std::pow(cplx(x, 0.0), 1.0 - end.b);
  end_moment_.resize(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    cplx acc = 0.0;
    for (std::size_t p = binom_x.size(); p-- > 0;) {
      acc += binom_x[p] / (static_cast<double>(m) + static_cast<double>(p) + end_shift);
    }
    end_moment_[static_cast<std::size_t>(m)] = basis_[static_cast<std::size_t>(m)] * lead * acc;
  }
}

void IteratedIntegralSplit::Side::prefixes(std::span<const Letter> letters,
                                          std::vector<cplx>& values,
                                          std::vector<double>& truncation) const {
  const std::size_t n = start_coeff_.size();
  values.clear();
  truncation.clear();
  std::vector<cplx> coeff = start_coeff_;
  auto record = [&](const std::vector<cplx>& weight) {
    cplx sum = 0.0;
    for (std::size_t m = n; m-- > 0;) sum += coeff[m] * weight[m];
    values.push_back(sum);
    truncation.push_back(truncation_estimate(coeff, weight, ratio_));
  };
  record(basis_);
  for (Letter letter : letters) {
    if (letter == Letter::T) {
      for (std::size_t m = 0; m < n; ++m) coeff[m] *= inv_shift_[m];
    } else {
      cplx partial = 0.0;
      for (std::size_t m = 0; m + 1 < n; ++m) {
        partial += coeff[m];
        coeff[m] = partial;
      }
      for (std::size_t m = n - 1; m > 0; --m) coeff[m] = coeff[m - 1] * inv_shift_[m];
      coeff[0] = 0.0;
    }
    record(basis_);
  }
  record(end_moment_);
}

IteratedIntegralSplit::IteratedIntegralSplit(EndpointForm start, EndpointForm end, double split_point)
    : low_(start, end, split_point),
      high_(mirror_of_end(end), mirror_of_start(start), 1.0 - split_point) {}

IteratedIntegralSplit IteratedIntegralSplit::for_Z(cplx alpha, cplx beta, double split_point) {
  return IteratedIntegralSplit({alpha, beta}, {alpha, beta}, split_point);
}

IteratedIntegralSplit IteratedIntegralSplit::for_multiple_hurwitz(cplx alpha, double split_point) {
  return IteratedIntegralSplit({1.0, alpha}, {1.0, 1.0}, split_point);
}

SeriesValue IteratedIntegralSplit::evaluate(std::span<const Letter> interior) const {
  std::vector<Letter> mirrored(interior.rbegin(), interior.rend());
  for (Letter& l : mirrored) l = (l == Letter::T) ? Letter::U : Letter::T;

  std::vector<cplx> low, high;
  std::vector<double> low_err, high_err;
  low_.prefixes(interior, low, low_err);
  high_.prefixes(mirrored, high, high_err);

  const std::size_t forms = interior.size() + 2;
  // Cut after j forms: prefix of length j below x0 times suffix of length K - j above.
  cplx total = high[forms - 1] + low[forms - 1];
  double bound = high_err[forms - 1] + low_err[forms - 1];
  double magnitude = std::abs(high[forms - 1]) + std::abs(low[forms - 1]);
  for (std::size_t j = 1; j < forms; ++j) {
    const cplx l = low[j - 1];
    const cplx h = high[forms - j - 1];
    total += l * h;
    bound += low_err[j - 1] * std::abs(h) + std::abs(l) * high_err[forms - j - 1];
    magnitude += std::abs(l * h);
  }
  SeriesValue out;
  out.value = total;
  out.tail_bound = bound + 64.0 * std::numeric_limits<double>::epsilon() * magnitude;
  out.terms_used = std::max(low_.terms(), high_.terms());
  return out;
}

SeriesValue IteratedIntegralSplit::evaluate_index(std::span<const int> parts) const {
  const auto letters = interior_letters(parts);
  return evaluate(letters);
}

}  // namespace ohno
