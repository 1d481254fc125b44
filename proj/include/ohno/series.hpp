#pragma once

// Floating-point evaluation of the two-parameter multiple series Z(k; alpha, beta),
// the Hurwitz zeta function, the two-parameter Euler sum, and the multiple
// Hurwitz zeta function. Every evaluation reports a truncation bound.

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "ohno/index.hpp"

namespace ohno {

using cplx = std::complex<double>;

enum class ParamConstraint { RePositive, NotNonPositiveInteger, Unconstrained };

class ComplexParameter {
 public:
  /// Raises ParameterDomain when `value` violates `constraint`.
  static ComplexParameter make(cplx value, ParamConstraint constraint, std::string_view name = "parameter");

  cplx value() const noexcept { return value_; }
  ParamConstraint constraint() const noexcept { return constraint_; }

 private:
  ComplexParameter(cplx value, ParamConstraint constraint) : value_(value), constraint_(constraint) {}
  cplx value_;
  ParamConstraint constraint_;
};

bool is_non_positive_integer(cplx z) noexcept;

enum class TailMode { IntegralBound, FirstOmittedTerm };

/// Auto uses the split iterated-integral evaluator whenever Re(alpha) > 0 and
/// Re(beta) > 0, and the direct sweep otherwise.
enum class Method { Auto, Sweep, Split };

struct EvalSettings {
  long max_terms = 100000;
  /// 0 selects the default: 1e-8 for Re(alpha) >= 1, 1e-6 below.
  double target_tol = 0.0;
  TailMode tail_mode = TailMode::IntegralBound;
  Method method = Method::Auto;
  /// Interior point where the split evaluator cuts the unit interval.
  double split_point = 0.4375;

  /// Raises ParameterDomain for max_terms < 16, negative tolerances, or a
  /// split point outside (0.1, 0.9).
  void validate() const;
};

/// Real parts below this make the direct sweep hopeless at desk scale.
inline constexpr double kPracticalAlphaFloor = 0.3;

double effective_tolerance(const EvalSettings& settings, cplx alpha);

struct SeriesValue {
  cplx value{};
  double tail_bound = 0.0;
  long terms_used = 0;
  bool converged = false;
  std::string warning;
};

/// r_m = (alpha)_m / m! and w_m = m! / (alpha)_{m+1}, m = 0..m_max, by ratio updates.
struct PochhammerStreams {
  std::vector<cplx> ratio;
  std::vector<cplx> inverse;
};

PochhammerStreams pochhammer_ratio_stream(cplx alpha, int m_max);

/// Z(k; alpha, beta); dispatches on settings.method.
SeriesValue eval_Z(const AdmissibleIndex& k, cplx alpha, cplx beta, const EvalSettings& settings = {});

/// Single O(depth * M) accumulator sweep over m = 0..M-1 with an empirical
/// tail bound. Accepts any beta that is not a non-positive integer.
SeriesValue eval_Z_sweep(const AdmissibleIndex& k, cplx alpha, cplx beta, const EvalSettings& settings = {});

/// Split iterated-integral evaluation; needs Re(alpha) > 0 and Re(beta) > 0.
SeriesValue eval_Z_split(const AdmissibleIndex& k, cplx alpha, cplx beta, const EvalSettings& settings = {});

/// Literal nested loops over 0 <= m_1 < ... < m_n <= M-1. Test oracle only:
/// depth <= 3 (DepthTooLarge) and M <= 3000.
SeriesValue eval_Z_naive(const AdmissibleIndex& k, cplx alpha, cplx beta, long max_terms);

/// zeta(s; alpha) for integer s >= 2 and Re(alpha) > 0.
SeriesValue eval_hurwitz(int s, cplx alpha, const EvalSettings& settings = {});

/// sum_{l >= 0} 1 / ((l + alpha)^m (l + beta)^n).
SeriesValue eval_two_param_sum(int m, int n, cplx alpha, cplx beta, const EvalSettings& settings = {});

/// zeta(k_1, ..., k_n; alpha) = sum_{0 <= m_1 < ... < m_n} prod (m_i + alpha)^{-k_i}.
SeriesValue eval_multiple_hurwitz(const AdmissibleIndex& k, cplx alpha, const EvalSettings& settings = {});
SeriesValue eval_multiple_hurwitz_sweep(const AdmissibleIndex& k, cplx alpha,
                                        const EvalSettings& settings = {});
SeriesValue eval_multiple_hurwitz_split(const AdmissibleIndex& k, cplx alpha,
                                        const EvalSettings& settings = {});

}  // namespace ohno
