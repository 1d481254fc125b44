#pragma once

// Z(k; alpha, beta) as a nested integral over the simplex 1 > t_k > ... > t_1 > 0,
// evaluated by one-dimensional Gauss-Legendre rules innermost first. Meant as an
// oracle for small weights, independent of the series evaluators.

#include <vector>

#include "ohno/verifier.hpp"

namespace ohno {

enum class OmegaKind { OneOverOneMinusT, OneOverT };

struct IntegrandSpec {
  int weight = 0;
  /// omega[i] is the form attached to t_{i+1}.
  std::vector<OmegaKind> omega;
  cplx alpha;
  cplx beta;

  /// t_i carries dt/(1-t) exactly when i = k_1 + ... + k_j + 1 for some j < n.
  static IntegrandSpec from_index(const AdmissibleIndex& k, cplx alpha, cplx beta);
};

struct QuadSettings {
  int nodes = 64;
  /// Permits weight 4 with at most 32 nodes per level.
  bool allow_weight4 = false;
  /// 0 selects 1e-4, or 1e-3 at weight 4.
  double tol = 0.0;
};

/// WeightTooLarge above weight 3 (4 with allow_weight4); ParameterDomain unless
/// Re(alpha) >= 0.5 and Re(beta) >= 0.5. tail_bound holds |I_n - I_{n/2}|.
SeriesValue eval_Z_integral(const AdmissibleIndex& k, cplx alpha, cplx beta, const QuadSettings& settings = {});

/// The integral for k at (alpha, beta) against the integral for dual(k) at (beta, alpha).
VerificationReport verify_change_of_variables(const AdmissibleIndex& k, cplx alpha, cplx beta,
                                              const QuadSettings& settings = {});

/// The integral against eval_Z at the same point.
VerificationReport verify_integral_representation(const AdmissibleIndex& k, cplx alpha, cplx beta,
                                                  const QuadSettings& settings = {},
                                                  const EvalSettings& eval = {});

/// Gauss-Legendre nodes and weights on (0, 1).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

}  // namespace ohno
