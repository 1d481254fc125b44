#include "ohno/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "ohno/errors.hpp"
#include "ohno/format.hpp"
#include "ohno/integral_oracle.hpp"

namespace ohno {

void finalize(VerificationReport& report) {
  report.abs_err = std::abs(report.lhs - report.rhs);
  report.pass = report.abs_err <= std::max(report.tol, report.combined_tail);
}

VerificationReport failed_report(std::string relation_id, std::vector<std::pair<std::string, std::string>> inputs,
                                 std::string message) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  VerificationReport r;
  r.relation_id = std::move(relation_id);
  r.inputs = std::move(inputs);
  r.lhs = cplx(nan, nan);
  r.rhs = cplx(nan, nan);
  r.abs_err = nan;
  r.combined_tail = nan;
  r.tol = nan;
  r.pass = false;
  r.error = std::move(message);
  return r;
}

DiagonalZ& DiagonalZCache::at(cplx alpha) {
  auto& slot = cache_[{alpha.real(), alpha.imag()}];
  if (!slot) slot = std::make_unique<DiagonalZ>(alpha, settings_);
  return *slot;
}

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double default_tol(const VerifySettings& s, int derivative_order, double tails) {
  if (s.tol > 0.0) return s.tol;
  double base = 1e-6;
  if (derivative_order == 1) base = 1e-5;
  if (derivative_order >= 2) base = 1e-4;
  return std::max(base, 10.0 * tails);
}

double loose_tol(const VerifySettings& s, double tails) {
  if (s.tol > 0.0) return s.tol;
  return std::max(1e-4, 10.0 * tails);
}

void require_positive(cplx z, const char* name) { ComplexParameter::make(z, ParamConstraint::RePositive, name); }

VerificationReport make_report(std::string id, Inputs inputs, const SeriesValue& lhs, const SeriesValue& rhs) {
  VerificationReport r;
  r.relation_id = std::move(id);
  r.inputs = std::move(inputs);
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.combined_tail = lhs.tail_bound + rhs.tail_bound;
  return r;
}

// d^order/dalpha^order of alpha -> f(Z at alpha) at center. The returned
// tail_bound propagates the largest node tail through the Cauchy estimate.
SeriesValue derivative(DiagonalZCache& cache, const std::function<SeriesValue(DiagonalZ&)>& f, cplx center,
                       int order, int points) {
  if (order == 0) return f(cache.at(center));
  const auto contour = ContourSpec::around_parameter(center, 0.0, points);
  double worst_tail = 0.0;
  SeriesValue out;
  out.value = contour_derivative(
      [&](cplx a) {
        const SeriesValue v = f(cache.at(a));
        worst_tail = std::max(worst_tail, v.tail_bound);
        return v.value;
      },
      contour, order);
  out.tail_bound = factorial(order) / std::pow(contour.radius, order) * worst_tail;
  out.converged = true;
  return out;
}

SeriesValue combine(const SeriesValue& a, const SeriesValue& b, cplx wb) {
  SeriesValue out;
  out.value = a.value + wb * b.value;
  out.tail_bound = a.tail_bound + std::abs(wb) * b.tail_bound;
  out.converged = a.converged && b.converged;
  return out;
}

void for_each_pattern(int total, int slots, const std::function<void(const InsertionPattern&)>& visit) {
  for_each_composition(total, slots, [&](std::span<const int> parts) {
    visit(InsertionPattern{std::vector<int>(parts.begin(), parts.end())});
  });
}

Inputs index_inputs(const AdmissibleIndex& k, std::initializer_list<std::pair<std::string, std::string>> rest) {
  Inputs in{{"index", k.to_string()}};
  in.insert(in.end(), rest);
  return in;
}

void require_order(int value, int max, const char* name) {
  if (value < 0 || value > max) {
    throw Error(ErrorCode::ParameterDomain,
                std::string(name) + " must lie in [0, " + std::to_string(max) + "], got " + std::to_string(value));
  }
}

}  // namespace

VerificationReport verify_duality(const AdmissibleIndex& k, cplx alpha, cplx beta, const VerifySettings& settings) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  const auto lhs = eval_Z(k, alpha, beta, settings.eval);
  const auto rhs = eval_Z(dual(k), beta, alpha, settings.eval);
  auto r = make_report("duality", index_inputs(k, {{"alpha", format_complex(alpha)}, {"beta", format_complex(beta)}}),
                       lhs, rhs);
  r.tol = default_tol(settings, 0, r.combined_tail);
  finalize(r);
  return r;
}

VerificationReport verify_ohno(DiagonalZCache& cache, const AdmissibleIndex& k, int l, cplx alpha,
                               const VerifySettings& settings) {
  require_positive(alpha, "alpha");
  if (l < 0) throw Error(ErrorCode::ParameterDomain, "l must be non-negative");
  DiagonalZ& z = cache.at(alpha);
  const auto lhs = eval_S(z, k, l);
  const auto rhs = eval_S(z, dual(k), l);
  auto r = make_report("ohno", index_inputs(k, {{"l", std::to_string(l)}, {"alpha", format_complex(alpha)}}), lhs,
                       rhs);
  r.tol = default_tol(settings, 0, r.combined_tail);
  finalize(r);
  return r;
}

VerificationReport verify_ohno(const AdmissibleIndex& k, int l, cplx alpha, const VerifySettings& settings) {
  DiagonalZCache cache(settings.eval);
  return verify_ohno(cache, k, l, alpha, settings);
}

VerificationReport verify_sum_formula_alpha(DiagonalZCache& cache, int m, int n, cplx alpha,
                                            const VerifySettings& settings) {
  if (!(0 < m && m < n)) throw Error(ErrorCode::ParameterDomain, "sum formula needs 0 < m < n");
  require_positive(alpha, "alpha");
  DiagonalZ& z = cache.at(alpha);
  SeriesValue lhs;
  lhs.converged = true;
  for (const auto& k : admissible_indices(n, m)) lhs = combine(lhs, z(k), 1.0);
  const auto rhs = eval_hurwitz(n, alpha, settings.eval);
  auto r = make_report("sum_formula_alpha",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"alpha", format_complex(alpha)}}, lhs, rhs);
  r.tol = default_tol(settings, 0, r.combined_tail);
  finalize(r);
  return r;
}

VerificationReport verify_sum_formula_alpha(int m, int n, cplx alpha, const VerifySettings& settings) {
  DiagonalZCache cache(settings.eval);
  return verify_sum_formula_alpha(cache, m, n, alpha, settings);
}

VerificationReport verify_sum_formula_two_param(int m, int n, cplx alpha, cplx beta, const VerifySettings& settings) {
  if (m < 1 || n < 1) throw Error(ErrorCode::ParameterDomain, "two-parameter sum formula needs m, n >= 1");
  require_positive(alpha, "alpha");
  ComplexParameter::make(beta, ParamConstraint::NotNonPositiveInteger, "beta");
  SeriesValue lhs;
  lhs.converged = true;
  for (const auto& k : admissible_indices(m + n, m)) lhs = combine(lhs, eval_Z(k, alpha, beta, settings.eval), 1.0);
  const auto rhs = eval_two_param_sum(m, n, alpha, beta, settings.eval);
  auto r = make_report("sum_formula_two_param",
                       {{"m", std::to_string(m)},
                        {"n", std::to_string(n)},
                        {"alpha", format_complex(alpha)},
                        {"beta", format_complex(beta)}},
                       lhs, rhs);
  r.tol = default_tol(settings, 0, r.combined_tail);
  finalize(r);
  return r;
}

VerificationReport verify_coefficient_duality(DiagonalZCache& cache, const AdmissibleIndex& k, int l, cplx alpha,
                                 const VerifySettings& settings) {
  require_positive(alpha, "alpha");
  if (l < 0) throw Error(ErrorCode::ParameterDomain, "l must be non-negative");
  DiagonalZ& z = cache.at(alpha);
  const auto lhs = left_coefficient(z, k, l);
  const auto rhs = right_coefficient(z, dual(k), l);
  auto r = make_report("coefficient_duality", index_inputs(k, {{"l", std::to_string(l)}, {"alpha", format_complex(alpha)}}), lhs,
                       rhs);
  r.tol = default_tol(settings, 0, r.combined_tail);
  finalize(r);
  return r;
}

VerificationReport verify_coefficient_duality(const AdmissibleIndex& k, int l, cplx alpha, const VerifySettings& settings) {
  DiagonalZCache cache(settings.eval);
  return verify_coefficient_duality(cache, k, l, alpha, settings);
}

VerificationReport verify_coefficient_derivatives(DiagonalZCache& cache, const AdmissibleIndex& k, int m, cplx beta,
                                  CoefficientForm form, const VerifySettings& settings) {
  require_positive(beta, "beta");
  require_order(m, 3, "m");
  using Coef = SeriesValue (*)(DiagonalZ&, const AdmissibleIndex&, int);
  const Coef direct = form == CoefficientForm::Right ? static_cast<Coef>(right_coefficient)
                                                     : static_cast<Coef>(left_coefficient);
  const Coef other = form == CoefficientForm::Right ? static_cast<Coef>(left_coefficient)
                                                    : static_cast<Coef>(right_coefficient);
  const auto lhs = direct(cache.at(beta), k, m);
  SeriesValue rhs;
  rhs.converged = true;
  const double sign = (m % 2) ? -1.0 : 1.0;
  for (int l = 0; l <= m; ++l) {
    const auto d = derivative(cache, [&](DiagonalZ& z) { return other(z, k, l); }, beta, m - l,
                              settings.contour_points);
    rhs = combine(rhs, d, sign / factorial(m - l));
  }
  auto r = make_report(form == CoefficientForm::Right ? "coefficient_derivatives_right" : "coefficient_derivatives_left",
                       index_inputs(k, {{"m", std::to_string(m)}, {"beta", format_complex(beta)}}), lhs, rhs);
  r.tol = default_tol(settings, m, r.combined_tail);
  finalize(r);
  return r;
}

VerificationReport verify_coefficient_derivatives(const AdmissibleIndex& k, int m, cplx beta, CoefficientForm form,
                                  const VerifySettings& settings) {
  DiagonalZCache cache(settings.eval);
  return verify_coefficient_derivatives(cache, k, m, beta, form, settings);
}

namespace {

// sum_{i<=order} sum_{|p|=i} {S_{order-i}(first(p)) - S_{order-i}(second(p))} over
// insertion patterns p of base.
SeriesValue insertion_difference(DiagonalZ& z, const AdmissibleIndex& base, int order, bool dual_first) {
  SeriesValue out;
  out.converged = true;
  for (int i = 0; i <= order; ++i) {
    for_each_pattern(i, base.depth() - 1, [&](const InsertionPattern& p) {
      const AdmissibleIndex inserted = insert_ones(base, p);
      const AdmissibleIndex flipped = dual(inserted);
      const auto& first = dual_first ? flipped : inserted;
      const auto& second = dual_first ? inserted : flipped;
      out = combine(out, eval_S(z, first, order - i), 1.0);
      out = combine(out, eval_S(z, second, order - i), -1.0);
    });
  }
  return out;
}

}  // namespace

VerificationReport verify_insertion_differences(DiagonalZCache& cache, const AdmissibleIndex& k, int m, cplx beta,
                               const VerifySettings& settings) {
  require_positive(beta, "beta");
  require_order(m, 2, "m");
  const AdmissibleIndex kd = dual(k);
  const auto lhs = insertion_difference(cache.at(beta), kd, m, true);
  SeriesValue rhs;
  rhs.converged = true;
  const double sign = (m % 2) ? -1.0 : 1.0;
  for (int l = 0; l <= m; ++l) {
    const auto d = derivative(cache, [&](DiagonalZ& z) { return insertion_difference(z, k, l, false); }, beta, m - l,
                              settings.contour_points);
    rhs = combine(rhs, d, sign / factorial(m - l));
  }
  auto r = make_report("insertion_differences", index_inputs(k, {{"m", std::to_string(m)}, {"beta", format_complex(beta)}}), lhs, rhs);
  r.tol = default_tol(settings, m, r.combined_tail);
  finalize(r);
  return r;
}

VerificationReport verify_insertion_differences(const AdmissibleIndex& k, int m, cplx beta, const VerifySettings& settings) {
  DiagonalZCache cache(settings.eval);
  return verify_insertion_differences(cache, k, m, beta, settings);
}

VerificationReport verify_derivative_duality(DiagonalZCache& cache, const AdmissibleIndex& k, int l, int m, cplx alpha0,
                                 const VerifySettings& settings) {
  require_positive(alpha0, "alpha");
  require_order(m, 3, "m");
  if (l < 0) throw Error(ErrorCode::ParameterDomain, "l must be non-negative");
  const AdmissibleIndex kd = dual(k);
  const auto lhs =
      derivative(cache, [&](DiagonalZ& z) { return eval_S(z, k, l); }, alpha0, m, settings.contour_points);
  const auto rhs =
      derivative(cache, [&](DiagonalZ& z) { return eval_S(z, kd, l); }, alpha0, m, settings.contour_points);
  auto r = make_report(
      "derivative_duality",
      index_inputs(k, {{"l", std::to_string(l)}, {"m", std::to_string(m)}, {"alpha", format_complex(alpha0)}}), lhs,
      rhs);
  r.tol = default_tol(settings, m, r.combined_tail);
  finalize(r);
  return r;
}

VerificationReport verify_derivative_duality(const AdmissibleIndex& k, int l, int m, cplx alpha0, const VerifySettings& settings) {
  DiagonalZCache cache(settings.eval);
  return verify_derivative_duality(cache, k, l, m, alpha0, settings);
}

namespace {

SeriesValue mixed_partial(const std::function<SeriesValue(cplx, cplx)>& f, cplx center, int m, int n,
                          const VerifySettings& settings) {
  double worst_tail = 0.0;
  auto value = [&](cplx x, cplx y) {
    const SeriesValue v = f(x, y);
    worst_tail = std::max(worst_tail, v.tail_bound);
    return v.value;
  };
  SeriesValue out;
  out.converged = true;
  if (m == 0 && n == 0) return f(center, center);
  const double radius = center.real() / 4.0;
  if (n == 0) {
    const auto c = ContourSpec::around_parameter(center, radius, settings.contour_points);
    out.value = contour_derivative([&](cplx x) { return value(x, center); }, c, m);
  } else if (m == 0) {
    const auto c = ContourSpec::around_parameter(center, radius, settings.contour_points);
    out.value = contour_derivative([&](cplx y) { return value(center, y); }, c, n);
  } else {
    const auto c = ContourSpec::around_parameter(center, radius, settings.mixed_contour_points);
    out.value = contour_mixed_partial(value, c, c, m, n);
  }
  out.tail_bound = factorial(m) * factorial(n) / std::pow(radius, m + n) * worst_tail;
  return out;
}

}  // namespace

VerificationReport verify_mixed_partial_duality(const AdmissibleIndex& k, int m, int n, cplx alpha0,
                                    const VerifySettings& settings) {
  require_positive(alpha0, "alpha");
  if (m < 0 || n < 0 || m + n > 2) throw Error(ErrorCode::ParameterDomain, "mixed partials need m, n >= 0 and m + n <= 2");
  const AdmissibleIndex kd = dual(k);
  const auto lhs = mixed_partial([&](cplx a, cplx b) { return eval_Z(k, a, b, settings.eval); }, alpha0, m, n,
                                 settings);
  const auto rhs = mixed_partial([&](cplx a, cplx b) { return eval_Z(kd, b, a, settings.eval); }, alpha0, m, n,
                                 settings);
  auto r = make_report(
      "mixed_partial_duality",
      index_inputs(k, {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"alpha", format_complex(alpha0)}}), lhs,
      rhs);
  r.tol = default_tol(settings, m + n, r.combined_tail);
  finalize(r);
  return r;
}

VerificationReport verify_shifted_derivative_duality(DiagonalZCache& cache, const AdmissibleIndex& k, int l, cplx alpha0,
                                        const VerifySettings& settings) {
  require_positive(alpha0, "alpha");
  require_order(l, 2, "l");
  auto side = [&](const AdmissibleIndex& idx) {
    SeriesValue acc;
    acc.converged = true;
    for (int p = 0; p <= l; ++p) {
      const auto d = derivative(cache, [&](DiagonalZ& z) { return eval_S(z, idx, l - p); }, alpha0, p,
                                settings.contour_points);
      acc = combine(acc, d, 1.0 / factorial(p));
    }
    return acc;
  };
  const auto lhs = side(k);
  const auto rhs = side(dual(k));
  auto r = make_report("shifted_derivative_duality", index_inputs(k, {{"l", std::to_string(l)}, {"alpha", format_complex(alpha0)}}),
                       lhs, rhs);
  r.tol = loose_tol(settings, r.combined_tail);
  finalize(r);
  return r;
}

VerificationReport verify_shifted_derivative_duality(const AdmissibleIndex& k, int l, cplx alpha0, const VerifySettings& settings) {
  DiagonalZCache cache(settings.eval);
  return verify_shifted_derivative_duality(cache, k, l, alpha0, settings);
}

namespace {

// sum_{l=1}^{L} l^-n (1-x)_{l-1} / (alpha-x)_l plus the asymptotic tail
// C sum_{l>L} l^{-n-alpha} (1 + c/l), c = -alpha(alpha-2x-1)/2.
cplx hurwitz_identity_series(cplx x, cplx alpha, int n, long terms) {
  cplx g = 1.0 / (alpha - x);
  cplx sum = 0.0;
  for (long l = 1;; ++l) {
    sum += g / std::pow(static_cast<double>(l), n);
    if (l == terms) break;
    const double ld = static_cast<double>(l);
    g *= (ld - x) / (alpha - x + ld);
  }
  const double L = static_cast<double>(terms);
  const cplx c = -alpha * (alpha - 2.0 * x - 1.0) / 2.0;
  const cplx amplitude = g * std::pow(L, alpha) / (1.0 + c / L);
  auto power_tail = [L](cplx s) {
    return std::pow(L, 1.0 - s) / (s - 1.0) - std::pow(L, -s) / 2.0 + s * std::pow(L, -s - 1.0) / 12.0;
  };
  const cplx s = static_cast<double>(n) + alpha;
  return sum + amplitude * (power_tail(s) + c * power_tail(s + 1.0));
}

}  // namespace

VerificationReport verify_hurwitz_sum_identity(int weight, int n, cplx alpha, const VerifySettings& settings) {
  if (!(0 < n && n < weight)) throw Error(ErrorCode::ParameterDomain, "identity needs 0 < n < weight");
  if (weight - n - 1 > 3) throw Error(ErrorCode::ParameterDomain, "derivative order weight - n - 1 must be <= 3");
  require_positive(alpha, "alpha");
  const int order = weight - n - 1;
  SeriesValue lhs;
  lhs.converged = true;
  for (const auto& k : admissible_indices(weight, n)) lhs = combine(lhs, eval_multiple_hurwitz(k, alpha, settings.eval), 1.0);

  const long terms = std::max(256L, settings.eval.max_terms / 4);
  const ContourSpec contour{0.0, std::min(1.0, alpha.real()) / 2.0, settings.contour_points};
  auto rhs_with = [&](long t) {
    return contour_derivative([&](cplx x) { return hurwitz_identity_series(x, alpha, n, t); }, contour, order) / factorial(order);
  };
  SeriesValue rhs;
  rhs.value = rhs_with(terms);
  rhs.tail_bound = std::abs(rhs.value - rhs_with(terms / 2));
  rhs.terms_used = terms;
  rhs.converged = true;
  auto r = make_report("hurwitz_sum_identity", {{"weight", std::to_string(weight)}, {"n", std::to_string(n)}, {"alpha", format_complex(alpha)}},
                       lhs, rhs);
  r.tol = loose_tol(settings, r.combined_tail);
  finalize(r);
  return r;
}

const std::vector<std::string>& relation_names() {
  static const std::vector<std::string> names = {
      "duality", "ohno",     "sum_formula_alpha", "sum_formula_two_param", "coefficient_duality", "coefficient_derivatives_right",
      "coefficient_derivatives_left", "insertion_differences", "derivative_duality", "mixed_partial_duality", "shifted_derivative_duality", "hurwitz_sum_identity", "change_of_variables", "integral"};
  return names;
}

namespace {

const AdmissibleIndex& need_index(const RelationRequest& q) {
  if (!q.index) throw Error(ErrorCode::ParseError, "relation '" + q.relation + "' needs an index");
  return *q.index;
}

}  // namespace

VerificationReport verify_relation(const RelationRequest& q, const VerifySettings& s) {
  const std::string& id = q.relation;
  if (id == "duality") return verify_duality(need_index(q), q.alpha, q.beta, s);
  if (id == "ohno") return verify_ohno(need_index(q), q.l, q.alpha, s);
  if (id == "sum_formula_alpha") return verify_sum_formula_alpha(q.m, q.n, q.alpha, s);
  if (id == "sum_formula_two_param") return verify_sum_formula_two_param(q.m, q.n, q.alpha, q.beta, s);
  if (id == "coefficient_duality") return verify_coefficient_duality(need_index(q), q.l, q.alpha, s);
  if (id == "coefficient_derivatives_right") return verify_coefficient_derivatives(need_index(q), q.m, q.beta, CoefficientForm::Right, s);
  if (id == "coefficient_derivatives_left") return verify_coefficient_derivatives(need_index(q), q.m, q.beta, CoefficientForm::Left, s);
  if (id == "insertion_differences") return verify_insertion_differences(need_index(q), q.m, q.beta, s);
  if (id == "derivative_duality") return verify_derivative_duality(need_index(q), q.l, q.m, q.alpha, s);
  if (id == "mixed_partial_duality") return verify_mixed_partial_duality(need_index(q), q.m, q.n, q.alpha, s);
  if (id == "shifted_derivative_duality") return verify_shifted_derivative_duality(need_index(q), q.l, q.alpha, s);
  if (id == "hurwitz_sum_identity") return verify_hurwitz_sum_identity(q.weight, q.n, q.alpha, s);
  QuadSettings quad;
  quad.tol = s.tol;
  if (id == "change_of_variables") return verify_change_of_variables(need_index(q), q.alpha, q.beta, quad);
  if (id == "integral") return verify_integral_representation(need_index(q), q.alpha, q.beta, quad, s.eval);
  throw Error(ErrorCode::ParseError, "unknown relation '" + id + "'");
}

namespace {

class SweepRunner {
 public:
  SweepRunner(const SweepGrid& grid, const VerifySettings& settings)
      : grid_(grid), settings_(settings), cache_(settings.eval) {
    betas_ = grid.betas.empty() ? grid.alphas : grid.betas;
  }

  SweepResult run() {
    for (const auto& relation : grid_.relations) run_relation(relation);
    SweepResult result;
    result.reports = std::move(reports_);
    for (const auto& r : result.reports) {
      (r.pass ? result.passed : result.failed) += 1;
      if (r.relation_id != "ohno_closure" && !std::isnan(r.abs_err)) result.worst_abs_err = std::max(result.worst_abs_err, r.abs_err);
    }
    return result;
  }

 private:
  void add(const std::string& id, Inputs inputs, const std::function<VerificationReport()>& compute) {
    reports_.push_back(attempt(id, std::move(inputs), compute));
  }

  static VerificationReport attempt(const std::string& id, Inputs inputs,
                                    const std::function<VerificationReport()>& compute) {
    try {
      return compute();
    } catch (const std::exception& e) {
      return failed_report(id, std::move(inputs), e.what());
    }
  }

  std::vector<AdmissibleIndex> indices() const {
    std::vector<AdmissibleIndex> out;
    for (int w = std::max(2, grid_.min_weight); w <= grid_.max_weight; ++w) {
      for (const auto& k : admissible_indices(w)) {
        if (grid_.max_depth == 0 || k.depth() <= grid_.max_depth) out.push_back(k);
      }
    }
    return out;
  }

  void for_index_order_alpha(const std::string& id, const char* order_name,
                             const std::function<VerificationReport(const AdmissibleIndex&, int, cplx)>& check) {
    for (const auto& k : indices()) {
      for (int o = 0; o <= grid_.max_order; ++o) {
        for (cplx a : grid_.alphas) {
          add(id, index_inputs(k, {{order_name, std::to_string(o)}, {"alpha", format_complex(a)}}),
              [&] { return check(k, o, a); });
        }
      }
    }
  }

  void run_relation(const std::string& id) {
    if (id == "duality" || id == "change_of_variables" || id == "integral") {
      QuadSettings quad;
      quad.tol = settings_.tol;
      for (const auto& k : indices()) {
        for (cplx a : grid_.alphas) {
          for (cplx b : betas_) {
            add(id, index_inputs(k, {{"alpha", format_complex(a)}, {"beta", format_complex(b)}}), [&] {
              if (id == "duality") return verify_duality(k, a, b, settings_);
              if (id == "change_of_variables") return verify_change_of_variables(k, a, b, quad);
              return verify_integral_representation(k, a, b, quad, settings_.eval);
            });
          }
        }
      }
    } else if (id == "ohno") {
      for (const auto& k : indices()) {
        for (int l = 0; l <= grid_.max_order; ++l) {
          for (cplx a : grid_.alphas) {
            reports_.push_back(ohno_report(k, l, a));
            if (l % 2 == 1) reports_.push_back(closure_report(k, l, a));
          }
        }
      }
    } else if (id == "sum_formula_alpha" || id == "sum_formula_two_param") {
      const bool two = id == "sum_formula_two_param";
      for (int w = std::max(2, grid_.min_weight); w <= grid_.max_weight; ++w) {
        for (int m = 1; m < w; ++m) {
          if (grid_.max_depth != 0 && m > grid_.max_depth) continue;
          for (cplx a : grid_.alphas) {
            if (!two) {
              add(id, {{"m", std::to_string(m)}, {"n", std::to_string(w)}, {"alpha", format_complex(a)}},
                  [&] { return verify_sum_formula_alpha(cache_, m, w, a, settings_); });
              continue;
            }
            for (cplx b : betas_) {
              add(id,
                  {{"m", std::to_string(m)},
                   {"n", std::to_string(w - m)},
                   {"alpha", format_complex(a)},
                   {"beta", format_complex(b)}},
                  [&] { return verify_sum_formula_two_param(m, w - m, a, b, settings_); });
            }
          }
        }
      }
    } else if (id == "coefficient_duality") {
      for_index_order_alpha(id, "l", [&](const AdmissibleIndex& k, int o, cplx a) {
        return verify_coefficient_duality(cache_, k, o, a, settings_);
      });
    } else if (id == "coefficient_derivatives_right" || id == "coefficient_derivatives_left") {
      const auto form = id == "coefficient_derivatives_right" ? CoefficientForm::Right : CoefficientForm::Left;
      for_index_order_alpha(id, "m", [&](const AdmissibleIndex& k, int o, cplx a) {
        return verify_coefficient_derivatives(cache_, k, o, a, form, settings_);
      });
    } else if (id == "insertion_differences") {
      for_index_order_alpha(id, "m", [&](const AdmissibleIndex& k, int o, cplx a) {
        return verify_insertion_differences(cache_, k, o, a, settings_);
      });
    } else if (id == "derivative_duality") {
      for (const auto& k : indices()) {
        for (int l = 0; l <= grid_.max_order; ++l) {
          for (int m = 0; m <= grid_.max_order; ++m) {
            for (cplx a : grid_.alphas) {
              add(id,
                  index_inputs(k, {{"l", std::to_string(l)}, {"m", std::to_string(m)}, {"alpha", format_complex(a)}}),
                  [&] { return verify_derivative_duality(cache_, k, l, m, a, settings_); });
            }
          }
        }
      }
    } else if (id == "mixed_partial_duality") {
      for (const auto& k : indices()) {
        for (int total = 0; total <= std::min(grid_.max_order, 2); ++total) {
          for (int m = total; m >= 0; --m) {
            for (cplx a : grid_.alphas) {
              add(id,
                  index_inputs(
                      k, {{"m", std::to_string(m)}, {"n", std::to_string(total - m)}, {"alpha", format_complex(a)}}),
                  [&] { return verify_mixed_partial_duality(k, m, total - m, a, settings_); });
            }
          }
        }
      }
    } else if (id == "shifted_derivative_duality") {
      for_index_order_alpha(id, "l", [&](const AdmissibleIndex& k, int o, cplx a) {
        return verify_shifted_derivative_duality(cache_, k, o, a, settings_);
      });
    } else if (id == "hurwitz_sum_identity") {
      for (int w = std::max(2, grid_.min_weight); w <= grid_.max_weight; ++w) {
        for (int n = 1; n < w; ++n) {
          if (w - n - 1 > 3 || (grid_.max_depth != 0 && n > grid_.max_depth)) continue;
          for (cplx a : grid_.alphas) {
            add(id, {{"weight", std::to_string(w)}, {"n", std::to_string(n)}, {"alpha", format_complex(a)}},
                [&] { return verify_hurwitz_sum_identity(w, n, a, settings_); });
          }
        }
      }
    } else {
      reports_.push_back(failed_report(id, {}, Error(ErrorCode::ParseError, "unknown relation '" + id + "'").what()));
    }
  }

  const VerificationReport& ohno_report(const AdmissibleIndex& k, int l, cplx a) {
    const std::string key = k.to_string() + "|" + std::to_string(l) + "|" + format_complex(a);
    auto it = ohno_memo_.find(key);
    if (it != ohno_memo_.end()) return it->second;
    auto report = attempt("ohno", index_inputs(k, {{"l", std::to_string(l)}, {"alpha", format_complex(a)}}),
                          [&] { return verify_ohno(cache_, k, l, a, settings_); });
    return ohno_memo_.emplace(key, std::move(report)).first->second;
  }

  // The odd-l case rests on ohno(h, i) for i < l, where h runs over k and dual(k)
  // with at most l - i ones inserted between consecutive parts.
  VerificationReport closure_report(const AdmissibleIndex& k, int l, cplx a) {
    Inputs in = index_inputs(k, {{"l", std::to_string(l)}, {"alpha", format_complex(a)}});
    return attempt("ohno_closure", in, [&] {
      std::size_t total = 0, passed = 0;
      for (const AdmissibleIndex& base : {k, dual(k)}) {
        for (int i = 0; i < l; ++i) {
          for (int s = 0; s <= l - i; ++s) {
            for_each_pattern(s, base.depth() - 1, [&](const InsertionPattern& p) {
              ++total;
              if (ohno_report(insert_ones(base, p), i, a).pass) ++passed;
            });
          }
        }
      }
      VerificationReport r;
      r.relation_id = "ohno_closure";
      r.inputs = in;
      r.inputs.emplace_back("dependencies", std::to_string(total));
      r.lhs = static_cast<double>(total);
      r.rhs = static_cast<double>(passed);
      r.tol = 0.0;
      r.combined_tail = 0.0;
      finalize(r);
      return r;
    });
  }

  const SweepGrid& grid_;
  const VerifySettings& settings_;
  DiagonalZCache cache_;
  std::vector<cplx> betas_;
  std::vector<VerificationReport> reports_;
  std::map<std::string, VerificationReport> ohno_memo_;
};

}  // namespace

SweepResult sweep(const SweepGrid& grid, const VerifySettings& settings) {
  return SweepRunner(grid, settings).run();
}

}  // namespace ohno
