#pragma once

// Ohno sums S_l(k; alpha), the two coefficient families of the generating
// functions Z(k; beta, alpha) and Z(k; alpha, beta), their Taylor evaluation on
// D(beta), and derivative expansions.

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ohno/contour.hpp"
#include "ohno/series.hpp"
#include "ohno/split.hpp"

namespace ohno {

struct OhnoSumSpec {
  AdmissibleIndex base;
  int shift_total = 0;
  cplx alpha;
};

/// D(center) or a smaller disk: 0 < radius <= Re(center)/2.
struct ConvergenceDisk {
  cplx center;
  double radius = 0.0;

  /// radius 0 selects Re(center)/2. OutsideDisk if the invariant fails.
  static ConvergenceDisk make(cplx center, double radius = 0.0);
  bool contains(cplx z) const noexcept { return std::abs(z - center) < radius; }
};

/// Z(k; alpha, alpha) for a fixed alpha, memoized by index. Uses the split
/// evaluator when settings.method allows it, otherwise eval_Z.
class DiagonalZ {
 public:
  DiagonalZ(cplx alpha, const EvalSettings& settings);

  const SeriesValue& operator()(std::span<const int> parts);
  const SeriesValue& operator()(const AdmissibleIndex& k) { return (*this)(k.parts()); }

  cplx alpha() const noexcept { return alpha_; }
  const EvalSettings& settings() const noexcept { return settings_; }
  std::size_t cached() const noexcept { return memo_.size(); }

 private:
  cplx alpha_;
  EvalSettings settings_;
  std::optional<IteratedIntegralSplit> split_;
  std::unordered_map<std::string, SeriesValue> memo_;
};

SeriesValue eval_S(const OhnoSumSpec& spec, const EvalSettings& settings = {});
SeriesValue eval_S(DiagonalZ& z, const AdmissibleIndex& k, int l);

/// Coefficient of (alpha - beta)^l in Z(k; beta, alpha):
/// sum_i sum_{|p| = i} S_{l-i}(insert_ones(k, p); alpha).
SeriesValue left_coefficient(const AdmissibleIndex& k, int l, cplx alpha,
                                     const EvalSettings& settings = {});
SeriesValue left_coefficient(DiagonalZ& z, const AdmissibleIndex& k, int l);

/// Coefficient of (alpha - beta)^l in Z(k; alpha, beta): block distributions
/// over slot counts (k_1-1, ..., k_{n-1}-1, k_n-2), weighted by multiplicity.
SeriesValue right_coefficient(const AdmissibleIndex& k, int l, cplx alpha,
                                      const EvalSettings& settings = {});
SeriesValue right_coefficient(DiagonalZ& z, const AdmissibleIndex& k, int l);

enum class TaylorSide { Left, Right };

/// Left:  Z(k; point, center) = sum_l (center - point)^l left_coefficient(k, l, center).
/// Right: Z(k; center, point) = sum_l (center - point)^l right_coefficient(k, l, center).
/// Raises OutsideDisk unless point lies in the disk.
SeriesValue taylor_eval(const AdmissibleIndex& k, const ConvergenceDisk& disk, cplx point,
                        TaylorSide side, int l_max = 16, const EvalSettings& settings = {});
/// Same, reusing the memo of z; z.alpha() must equal disk.center.
SeriesValue taylor_eval(DiagonalZ& z, const AdmissibleIndex& k, const ConvergenceDisk& disk, cplx point,
                        TaylorSide side, int l_max = 16);

/// Partial sums for L = 0..l_max of the same expansion.
std::vector<cplx> taylor_partial_sums(const AdmissibleIndex& k, const ConvergenceDisk& disk,
                                      cplx point, TaylorSide side, int l_max,
                                      const EvalSettings& settings = {});
std::vector<cplx> taylor_partial_sums(DiagonalZ& z, const AdmissibleIndex& k, const ConvergenceDisk& disk,
                                      cplx point, TaylorSide side, int l_max);

/// d^m/dalpha^m S_l(k; alpha) at spec.alpha by contour quadrature.
cplx derivative_of_S(const OhnoSumSpec& spec, int m, const ContourSpec& contour,
                     const EvalSettings& settings = {});

/// ((-1)^m / m!) d^m/dalpha^m S_l(k; alpha) as a finite sum of Ohno sums:
/// compositions c of l, then i_1 + ... + i_n + block sums = m with slot counts
/// k_j + c_j (j < n) and k_n + c_n - 1, of S_{i_n} of the shifted index with
/// i_j ones inserted after entry j.
SeriesValue explicit_derivative_expansion(const AdmissibleIndex& k, int l, int m, cplx alpha,
                                          const EvalSettings& settings = {});

/// (beta)_{m_first} / (beta)_{m_last + 1}.
cplx pochhammer_quotient(cplx beta, int m_first, int m_last);

/// ((-1)^l / l!) d^l/dbeta^l of pochhammer_quotient via the sum over
/// m_first <= n_1 <= ... <= n_l <= m_last.
cplx pochhammer_quotient_derivative_chain(cplx beta, int m_first, int m_last, int l);

/// Same quantity via the decomposition along the chain m_1 < ... < m_n:
/// insertion counts, exponent compositions and inserted intermediate points.
cplx pochhammer_quotient_derivative_split(cplx beta, std::span<const int> chain, int l);

/// prod_{j<n} (m_j + beta)^{-k_j} (m_n + beta)^{-(k_n - 1)}.
cplx power_product(const AdmissibleIndex& k, std::span<const int> chain, cplx beta);

/// ((-1)^l / l!) d^l/dbeta^l of power_product, by block distributions.
cplx power_product_derivative(const AdmissibleIndex& k, std::span<const int> chain, cplx beta, int l);

/// Same, enumerating every per-slot assignment.
cplx power_product_derivative_raw(const AdmissibleIndex& k, std::span<const int> chain, cplx beta, int l);

}  // namespace ohno
