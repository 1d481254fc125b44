#pragma once

// Iterated-integral evaluator for Z(k; alpha, beta) and the multiple Hurwitz
// zeta function.
//
// Both are integrals over the simplex 0 < t_1 < ... < t_K < 1 of a word of
// one-forms: a start form t^{b-1}(1-t)^{-a} dt, interior letters dt/t (T) and
// dt/(1-t) (U), and an end form (1-t)^{a-1} t^{-b} dt. Cutting the interval at
// x0 splits the simplex into K+1 products of a prefix integral over (0, x0) and
// a suffix integral over (x0, 1). The suffix, after u = 1 - t, is again a
// prefix integral over (0, 1 - x0) of the reversed word with T and U swapped.
// Each prefix integral is x^b times a power series in x, so both sides
// converge geometrically.

#include <cstdint>
#include <span>
#include <vector>

#include "ohno/series.hpp"

namespace ohno {

enum class Letter : std::uint8_t { T, U };

/// Start form: t^{b-1} (1-t)^{-a}. End form: (1-t)^{a-1} t^{-b}.
struct EndpointForm {
  cplx a;
  cplx b;
};

/// Letters for the interior positions 2..K-1 of the word of `parts`, where the
/// full word is U T^{k_1-1} U T^{k_2-1} ... U T^{k_n-1}.
std::vector<Letter> interior_letters(std::span<const int> parts);

class IteratedIntegralSplit {
 public:
  IteratedIntegralSplit(EndpointForm start, EndpointForm end, double split_point);

  /// Z(k; alpha, beta): start (alpha, beta), end (alpha, beta).
  static IteratedIntegralSplit for_Z(cplx alpha, cplx beta, double split_point);
  /// zeta(k; alpha): start (1, alpha), end (1, 1).
  static IteratedIntegralSplit for_multiple_hurwitz(cplx alpha, double split_point);

  SeriesValue evaluate(std::span<const Letter> interior) const;
  /// `parts` must be admissible; it is not revalidated.
  SeriesValue evaluate_index(std::span<const int> parts) const;

 private:
  // Power series data for prefix integrals over (0, x) with fixed endpoint forms.
  class Side {
   public:
    Side(EndpointForm start, EndpointForm end, double x);

    /// values[j] is the prefix integral over the first j+1 forms for
    /// j < letters.size() + 1, and values.back() includes the end form.
    void prefixes(std::span<const Letter> letters, std::vector<cplx>& values,
                  std::vector<double>& truncation) const;
    int terms() const noexcept { return static_cast<int>(start_coeff_.size()); }

   private:
    double x_;
    double ratio_;
    std::vector<cplx> start_coeff_;
    std::vector<cplx> inv_shift_;
    std::vector<cplx> basis_;
    std::vector<cplx> end_moment_;
  };

  static EndpointForm mirror_of_end(EndpointForm end) { return {end.b, end.a}; }
  static EndpointForm mirror_of_start(EndpointForm start) { return {start.b, start.a}; }

  Side low_;
  Side high_;
};

}  // namespace ohno
