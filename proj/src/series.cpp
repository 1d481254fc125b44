#include "ohno/series.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <limits>

#include "neumaier.hpp"
#include "ohno/errors.hpp"
#include "ohno/split.hpp"

namespace ohno {

using detail::NeumaierSum;
using detail::pow_int;

bool is_non_positive_integer(cplx z) noexcept {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

ComplexParameter ComplexParameter::make(cplx value, ParamConstraint constraint, std::string_view name) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw Error(ErrorCode::ParameterDomain, std::string(name) + " must be finite");
  }
  switch (constraint) {
    case ParamConstraint::RePositive:
      if (!(value.real() > 0.0)) {
        throw Error(ErrorCode::ParameterDomain, std::string(name) + " needs a positive real part");
      }
      break;
    case ParamConstraint::NotNonPositiveInteger:
      if (is_non_positive_integer(value)) {
        throw Error(ErrorCode::ParameterDomain, std::string(name) + " must not be a non-positive integer");
      }
      break;
    case ParamConstraint::Unconstrained:
      break;
  }
  return ComplexParameter(value, constraint);
}

void EvalSettings::validate() const {
  if (max_terms < 16) {
    throw Error(ErrorCode::ParameterDomain, "max_terms must be at least 16");
  }
  if (!(target_tol >= 0.0)) {
    throw Error(ErrorCode::ParameterDomain, "target_tol must be non-negative");
  }
  if (!(split_point > 0.1 && split_point < 0.9)) {
    throw Error(ErrorCode::ParameterDomain, "split_point must lie in (0.1, 0.9)");
  }
}

double effective_tolerance(const EvalSettings& settings, cplx alpha) {
  if (settings.target_tol > 0.0) return settings.target_tol;
  return alpha.real() >= 1.0 ? 1e-8 : 1e-6;
}

PochhammerStreams pochhammer_ratio_stream(cplx alpha, int m_max) {
  PochhammerStreams s;
  if (m_max < 0) return s;
  s.ratio.resize(static_cast<std::size_t>(m_max) + 1);
  s.inverse.resize(static_cast<std::size_t>(m_max) + 1);
  s.ratio[0] = 1.0;
  s.inverse[0] = 1.0 / alpha;
  for (int m = 1; m <= m_max; ++m) {
    const auto i = static_cast<std::size_t>(m);
    s.ratio[i] = s.ratio[i - 1] * (alpha + static_cast<double>(m - 1)) / static_cast<double>(m);
    s.inverse[i] = s.inverse[i - 1] * static_cast<double>(m) / (alpha + static_cast<double>(m));
  }
  return s;
}

namespace {

void check_alpha_beta(cplx alpha, cplx beta) {
  ComplexParameter::make(alpha, ParamConstraint::RePositive, "alpha");
  ComplexParameter::make(beta, ParamConstraint::NotNonPositiveInteger, "beta");
}

void finish(SeriesValue& out, const EvalSettings& settings, cplx alpha) {
  out.converged = out.tail_bound <= effective_tolerance(settings, alpha);
  if (alpha.real() < kPracticalAlphaFloor) {
    out.warning = "Re(alpha) below the practical floor 0.3; convergence is slow";
  } else if (!out.converged) {
    out.warning = "tail bound exceeds target tolerance";
  }
}

// Empirical tail from the last computed terms, assuming |term(m)| behaves like
// C (log(m+1))^{d} / m^{1+r}.
class TailTracker {
 public:
  TailTracker(int log_power, double rate) : log_power_(log_power), rate_(rate) {}

  void record(long m, double magnitude) {
    last_[static_cast<std::size_t>(count_ % kWindow)] = {m, magnitude};
    ++count_;
  }

  double bound(long terms, TailMode mode) const {
    if (count_ == 0) return std::numeric_limits<double>::infinity();
    if (mode == TailMode::FirstOmittedTerm) {
      return last_[static_cast<std::size_t>((count_ - 1) % kWindow)].magnitude;
    }
    double c = 0.0;
    const long window = std::min<long>(count_, kWindow);
    for (long i = 0; i < window; ++i) {
      const Sample& s = last_[static_cast<std::size_t>(i)];
      if (s.m < 1) continue;
      const double md = static_cast<double>(s.m);
      c = std::max(c, s.magnitude * std::pow(md, 1.0 + rate_) /
                          std::pow(std::log(md + 1.0), log_power_));
    }
    const double big_m = static_cast<double>(terms);
    return 4.0 * c * std::pow(std::log(big_m + 1.0), log_power_) * std::pow(big_m, -rate_) / rate_;
  }

 private:
  struct Sample {
    long m = 0;
    double magnitude = 0.0;
  };
  static constexpr long kWindow = 16;
  int log_power_;
  double rate_;
  std::array<Sample, kWindow> last_{};
  long count_ = 0;
};

// f(x) = sum_j coef_j (x + shift)^{-exponent_j}.
struct PowerSum {
  cplx shift;
  std::vector<cplx> coef;
  std::vector<int> exponent;

  cplx derivative(double x, int order) const {
    cplx total = 0.0;
    const cplx base = 1.0 / (x + shift);
    for (std::size_t j = 0; j < coef.size(); ++j) {
      double falling = 1.0;
      for (int p = 0; p < order; ++p) falling *= -static_cast<double>(exponent[j] + p);
      total += coef[j] * falling * pow_int(base, exponent[j] + order);
    }
    return total;
  }

  cplx integral_from(double x) const {
    cplx total = 0.0;
    const cplx base = 1.0 / (x + shift);
    for (std::size_t j = 0; j < coef.size(); ++j) {
      total += coef[j] * pow_int(base, exponent[j] - 1) / static_cast<double>(exponent[j] - 1);
    }
    return total;
  }
};

// sum_{m >= 0} f(m): direct partial sum below N, Euler-Maclaurin remainder above.
// `tail_form` must equal f for x >= N.
SeriesValue sum_with_tail(const std::function<cplx(double)>& f, const PowerSum& tail_form,
                          const EvalSettings& settings, cplx alpha) {
  const long n_terms = settings.max_terms;
  NeumaierSum sum;
  for (long m = 0; m < n_terms; ++m) sum.add(f(static_cast<double>(m)));
  SeriesValue out;
  out.terms_used = n_terms;
  const double big_n = static_cast<double>(n_terms);
  if (settings.tail_mode == TailMode::FirstOmittedTerm) {
    out.value = sum.value();
    out.tail_bound = std::abs(f(big_n));
  } else {
    const PowerSum& g = tail_form;
    const cplx tail = g.integral_from(big_n) + g.derivative(big_n, 0) / 2.0 -
                      g.derivative(big_n, 1) / 12.0 + g.derivative(big_n, 3) / 720.0;
    out.value = sum.value() + tail;
    out.tail_bound = 2.0 * std::abs(g.derivative(big_n, 5)) / 30240.0;
  }
  finish(out, settings, alpha);
  return out;
}

}  // namespace

SeriesValue eval_Z_sweep(const AdmissibleIndex& k, cplx alpha, cplx beta, const EvalSettings& settings) {
  settings.validate();
  check_alpha_beta(alpha, beta);
  const auto& parts = k.parts();
  const std::size_t n = parts.size();
  const double rate = std::min(alpha.real(), 1.0);
  TailTracker tracker(static_cast<int>(n) - 1, rate);

  std::vector<cplx> acc(n > 1 ? n - 1 : 1, 0.0);
  NeumaierSum sum;
  cplx r = 1.0;
  cplx w = 1.0 / alpha;
  for (long m = 0; m < settings.max_terms; ++m) {
    const double md = static_cast<double>(m);
    const cplx x = 1.0 / (md + beta);
    const cplx lead = (n == 1) ? r : acc[n - 2];
    const cplx term = lead * w * pow_int(x, parts[n - 1] - 1);
    sum.add(term);
    tracker.record(m, std::abs(term));
    for (std::size_t j = n - 1; j >= 2; --j) acc[j - 1] += acc[j - 2] * pow_int(x, parts[j - 1]);
    if (n >= 2) acc[0] += r * pow_int(x, parts[0]);
    r *= (alpha + md) / (md + 1.0);
    w *= (md + 1.0) / (alpha + md + 1.0);
  }
  SeriesValue out;
  out.value = sum.value();
  out.terms_used = settings.max_terms;
  out.tail_bound = tracker.bound(settings.max_terms, settings.tail_mode);
  finish(out, settings, alpha);
  return out;
}

SeriesValue eval_Z_split(const AdmissibleIndex& k, cplx alpha, cplx beta, const EvalSettings& settings) {
  settings.validate();
  check_alpha_beta(alpha, beta);
  if (!(beta.real() > 0.0)) {
    throw Error(ErrorCode::ParameterDomain, "split evaluation needs Re(beta) > 0");
  }
  const auto split = IteratedIntegralSplit::for_Z(alpha, beta, settings.split_point);
  SeriesValue out = split.evaluate_index(k.parts());
  finish(out, settings, alpha);
  return out;
}

SeriesValue eval_Z(const AdmissibleIndex& k, cplx alpha, cplx beta, const EvalSettings& settings) {
  switch (settings.method) {
    case Method::Sweep: return eval_Z_sweep(k, alpha, beta, settings);
    case Method::Split: return eval_Z_split(k, alpha, beta, settings);
    case Method::Auto: break;
  }
  if (alpha.real() > 0.0 && beta.real() > 0.0) return eval_Z_split(k, alpha, beta, settings);
  return eval_Z_sweep(k, alpha, beta, settings);
}

SeriesValue eval_Z_naive(const AdmissibleIndex& k, cplx alpha, cplx beta, long max_terms) {
  check_alpha_beta(alpha, beta);
  const auto& parts = k.parts();
  const std::size_t n = parts.size();
  if (n > 3) throw Error(ErrorCode::DepthTooLarge, "naive summation supports depth <= 3");
  if (max_terms < 16 || max_terms > 3000) {
    throw Error(ErrorCode::ParameterDomain, "naive summation needs 16 <= M <= 3000");
  }
  const auto size = static_cast<std::size_t>(max_terms);
  const auto streams = pochhammer_ratio_stream(alpha, static_cast<int>(max_terms));
  // factor[i][m] = (m + beta)^{-k_i}, with the last exponent lowered by one.
  std::vector<std::vector<cplx>> factor(n, std::vector<cplx>(size));
  for (std::size_t i = 0; i < n; ++i) {
    const int e = (i + 1 == n) ? parts[i] - 1 : parts[i];
    for (std::size_t m = 0; m < size; ++m) {
      factor[i][m] = pow_int(1.0 / (static_cast<double>(m) + beta), e);
    }
  }
  TailTracker tracker(static_cast<int>(n) - 1, std::min(alpha.real(), 1.0));
  NeumaierSum total;
  for (std::size_t mn = 0; mn < size; ++mn) {
    const cplx last = streams.inverse[mn] * factor[n - 1][mn];
    cplx inner = 0.0;
    if (n == 1) {
      inner = streams.ratio[mn];
    } else if (n == 2) {
      for (std::size_t m1 = 0; m1 < mn; ++m1) inner += streams.ratio[m1] * factor[0][m1];
    } else {
      for (std::size_t m2 = 0; m2 < mn; ++m2) {
        for (std::size_t m1 = 0; m1 < m2; ++m1) {
          inner += streams.ratio[m1] * factor[0][m1] * factor[1][m2];
        }
      }
    }
    const cplx term = inner * last;
    total.add(term);
    tracker.record(static_cast<long>(mn), std::abs(term));
  }
  SeriesValue out;
  out.value = total.value();
  out.terms_used = max_terms;
  out.tail_bound = tracker.bound(max_terms, TailMode::IntegralBound);
  out.converged = true;
  return out;
}

SeriesValue eval_hurwitz(int s, cplx alpha, const EvalSettings& settings) {
  settings.validate();
  ComplexParameter::make(alpha, ParamConstraint::RePositive, "alpha");
  if (s < 2) throw Error(ErrorCode::ParameterDomain, "Hurwitz zeta needs s >= 2");
  const PowerSum f{alpha, {1.0}, {s}};
  return sum_with_tail([&](double x) { return f.derivative(x, 0); }, f, settings, alpha);
}

SeriesValue eval_two_param_sum(int m, int n, cplx alpha, cplx beta, const EvalSettings& settings) {
  settings.validate();
  check_alpha_beta(alpha, beta);
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::ParameterDomain, "two-parameter sum needs m, n >= 1");
  }
  // (x + beta)^{-n} = sum_j (-1)^j (n)_j / j! delta^j (x + alpha)^{-n-j}, delta = beta - alpha,
  // which converges for |delta| < |x + alpha|.
  const cplx delta = beta - alpha;
  const double big_n = static_cast<double>(settings.max_terms);
  if (std::abs(delta) >= 0.5 * std::abs(big_n + alpha)) {
    throw Error(ErrorCode::ParameterDomain, "max_terms too small for |beta - alpha|");
  }
  PowerSum f{alpha, {}, {}};
  cplx c = 1.0;
  for (int j = 0; j < 200; ++j) {
    f.coef.push_back(c);
    f.exponent.push_back(m + n + j);
    c *= -static_cast<double>(n + j) / static_cast<double>(j + 1) * delta;
    if (std::abs(c) * std::pow(std::abs(big_n + alpha), -(j + 1)) < 1e-30) break;
  }
  auto term = [&](double x) { return pow_int(1.0 / (x + alpha), m) * pow_int(1.0 / (x + beta), n); };
  return sum_with_tail(term, f, settings, alpha);
}

SeriesValue eval_multiple_hurwitz_sweep(const AdmissibleIndex& k, cplx alpha, const EvalSettings& settings) {
  settings.validate();
  ComplexParameter::make(alpha, ParamConstraint::RePositive, "alpha");
  const auto& parts = k.parts();
  const std::size_t n = parts.size();
  TailTracker tracker(static_cast<int>(n) - 1, 1.0);
  std::vector<cplx> acc(n > 1 ? n - 1 : 1, 0.0);
  NeumaierSum sum;
  for (long m = 0; m < settings.max_terms; ++m) {
    const cplx x = 1.0 / (static_cast<double>(m) + alpha);
    const cplx lead = (n == 1) ? cplx(1.0) : acc[n - 2];
    const cplx term = lead * pow_int(x, parts[n - 1]);
    sum.add(term);
    tracker.record(m, std::abs(term));
    for (std::size_t j = n - 1; j >= 2; --j) acc[j - 1] += acc[j - 2] * pow_int(x, parts[j - 1]);
    if (n >= 2) acc[0] += pow_int(x, parts[0]);
  }
  SeriesValue out;
  out.value = sum.value();
  out.terms_used = settings.max_terms;
  out.tail_bound = tracker.bound(settings.max_terms, settings.tail_mode);
  finish(out, settings, alpha);
  return out;
}

SeriesValue eval_multiple_hurwitz_split(const AdmissibleIndex& k, cplx alpha, const EvalSettings& settings) {
  settings.validate();
  ComplexParameter::make(alpha, ParamConstraint::RePositive, "alpha");
  const auto split = IteratedIntegralSplit::for_multiple_hurwitz(alpha, settings.split_point);
  SeriesValue out = split.evaluate_index(k.parts());
  finish(out, settings, alpha);
  return out;
}

SeriesValue eval_multiple_hurwitz(const AdmissibleIndex& k, cplx alpha, const EvalSettings& settings) {
  if (settings.method == Method::Sweep) return eval_multiple_hurwitz_sweep(k, alpha, settings);
  return eval_multiple_hurwitz_split(k, alpha, settings);
}

}  // namespace ohno
