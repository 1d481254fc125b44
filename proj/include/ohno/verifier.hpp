#pragma once

// Numerical checkers for the identities satisfied by Z(k; alpha, beta) and the
// Ohno sums. Each checker computes two sides along different code paths and
// returns a VerificationReport.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ohno/ohno_sums.hpp"

namespace ohno {

struct VerificationReport {
  std::string relation_id;
  /// Rendered inputs in a fixed order.
  std::vector<std::pair<std::string, std::string>> inputs;
  cplx lhs;
  cplx rhs;
  double abs_err = 0.0;
  double combined_tail = 0.0;
  double tol = 0.0;
  bool pass = false;
  /// Non-empty only for reports that could not be computed.
  std::string error;
};

/// Sets abs_err and pass from lhs, rhs, combined_tail and tol.
void finalize(VerificationReport& report);

/// A report for a computation that threw: numeric fields NaN, pass false.
VerificationReport failed_report(std::string relation_id,
                                 std::vector<std::pair<std::string, std::string>> inputs,
                                 std::string message);

struct VerifySettings {
  EvalSettings eval;
  /// 0 selects the per-checker default.
  double tol = 0.0;
  int contour_points = 64;
  /// Node count per level for nested contours (mixed partials).
  int mixed_contour_points = 32;
};

/// Diagonal evaluators keyed by the exact bits of alpha. Contour nodes are
/// shared between checkers, so a cache reused across a sweep avoids rebuilding.
class DiagonalZCache {
 public:
  explicit DiagonalZCache(const EvalSettings& settings) : settings_(settings) {}
  DiagonalZ& at(cplx alpha);
  const EvalSettings& settings() const noexcept { return settings_; }
  std::size_t size() const noexcept { return cache_.size(); }

 private:
  EvalSettings settings_;
  std::map<std::pair<double, double>, std::unique_ptr<DiagonalZ>> cache_;
};

VerificationReport verify_duality(const AdmissibleIndex& k, cplx alpha, cplx beta,
                                  const VerifySettings& settings = {});

VerificationReport verify_ohno(const AdmissibleIndex& k, int l, cplx alpha, const VerifySettings& settings = {});
VerificationReport verify_ohno(DiagonalZCache& cache, const AdmissibleIndex& k, int l, cplx alpha,
                               const VerifySettings& settings = {});

/// Sum of Z(k; alpha) over admissible k of depth m and weight n against zeta(n; alpha).
VerificationReport verify_sum_formula_alpha(int m, int n, cplx alpha, const VerifySettings& settings = {});
VerificationReport verify_sum_formula_alpha(DiagonalZCache& cache, int m, int n, cplx alpha,
                                            const VerifySettings& settings = {});

/// Sum of Z(k; alpha, beta) over admissible k of depth m and weight m + n
/// against sum_l (l + alpha)^-m (l + beta)^-n.
VerificationReport verify_sum_formula_two_param(int m, int n, cplx alpha, cplx beta,
                                                const VerifySettings& settings = {});

/// Left coefficient family of k against the right family of dual(k).
VerificationReport verify_coefficient_duality(const AdmissibleIndex& k, int l, cplx alpha, const VerifySettings& settings = {});
VerificationReport verify_coefficient_duality(DiagonalZCache& cache, const AdmissibleIndex& k, int l, cplx alpha,
                                 const VerifySettings& settings = {});

/// Right: the right coefficient of order m at beta against the alternating
/// sum of derivatives of left coefficients. Left: roles exchanged.
enum class CoefficientForm { Right, Left };

VerificationReport verify_coefficient_derivatives(const AdmissibleIndex& k, int m, cplx beta,
                                  CoefficientForm form = CoefficientForm::Right,
                                  const VerifySettings& settings = {});
VerificationReport verify_coefficient_derivatives(DiagonalZCache& cache, const AdmissibleIndex& k, int m, cplx beta,
                                  CoefficientForm form, const VerifySettings& settings = {});

/// Insertion-family differences over dual(k) at beta against derivative-weighted
/// differences over k.
VerificationReport verify_insertion_differences(const AdmissibleIndex& k, int m, cplx beta, const VerifySettings& settings = {});
VerificationReport verify_insertion_differences(DiagonalZCache& cache, const AdmissibleIndex& k, int m, cplx beta,
                               const VerifySettings& settings = {});

/// d^m/dalpha^m S_l(k; alpha) against the same for dual(k), at alpha0.
VerificationReport verify_derivative_duality(const AdmissibleIndex& k, int l, int m, cplx alpha0,
                                 const VerifySettings& settings = {});
VerificationReport verify_derivative_duality(DiagonalZCache& cache, const AdmissibleIndex& k, int l, int m, cplx alpha0,
                                 const VerifySettings& settings = {});

/// d^{m+n}/dalpha^m dbeta^n of Z(k; alpha, beta) and of Z(dual(k); beta, alpha) at (alpha0, alpha0).
VerificationReport verify_mixed_partial_duality(const AdmissibleIndex& k, int m, int n, cplx alpha0,
                                    const VerifySettings& settings = {});

/// sum_{p+q=l} (1/p!) d^p/dalpha^p S_q(k; alpha) at alpha0, against dual(k).
VerificationReport verify_shifted_derivative_duality(const AdmissibleIndex& k, int l, cplx alpha0,
                                        const VerifySettings& settings = {});
VerificationReport verify_shifted_derivative_duality(DiagonalZCache& cache, const AdmissibleIndex& k, int l, cplx alpha0,
                                        const VerifySettings& settings = {});

/// Sum of zeta(k; alpha) over admissible k of depth n and weight `weight`
/// against (1/(weight-n-1)!) sum_{l>=1} l^-n d^{weight-n-1}/dx^{weight-n-1}
/// [(1-x)_{l-1} / (alpha-x)_l] at x = 0.
VerificationReport verify_hurwitz_sum_identity(int weight, int n, cplx alpha, const VerifySettings& settings = {});

/// Relations understood by verify_relation and sweep.
const std::vector<std::string>& relation_names();

/// Parameters for a single named check. Unused fields are ignored.
struct RelationRequest {
  std::string relation;
  std::optional<AdmissibleIndex> index;
  cplx alpha = 1.0;
  cplx beta = 1.0;
  int l = 0;
  int m = 0;
  int n = 0;
  /// Weight for hurwitz_sum_identity.
  int weight = 0;
};

/// Dispatches on request.relation. Raises ParseError for unknown relations or
/// missing fields; checker errors propagate.
VerificationReport verify_relation(const RelationRequest& request, const VerifySettings& settings = {});

struct SweepGrid {
  std::vector<std::string> relations;
  int min_weight = 2;
  int max_weight = 0;
  /// 0 leaves the depth unrestricted.
  int max_depth = 0;
  /// Upper bound for the order parameters l and m.
  int max_order = 0;
  std::vector<cplx> alphas;
  /// Empty means reuse alphas.
  std::vector<cplx> betas;
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Over numeric reports; closure reports count failures instead.
  double worst_abs_err = 0.0;
};

/// Runs every listed relation over the grid in a fixed order. Errors become
/// failed reports. For every ohno report with odd l an ohno_closure report
/// follows, passing iff every lower-order instance the odd case depends on passes.
SweepResult sweep(const SweepGrid& grid, const VerifySettings& settings = {});

}  // namespace ohno
