#include "ohno/ohno_sums.hpp"

#include <algorithm>
#include <cmath>

#include "neumaier.hpp"
#include "ohno/errors.hpp"

namespace ohno {

using detail::NeumaierSum;
using detail::pow_int;

namespace {

class Accumulator {
 public:
  void add(const SeriesValue& v, cplx weight = 1.0) {
    sum_.add(weight * v.value);
    tail_ += std::abs(weight) * v.tail_bound;
    terms_ = std::max(terms_, v.terms_used);
    converged_ = converged_ && v.converged;
  }
  SeriesValue result() const {
    SeriesValue out;
    out.value = sum_.value();
    out.tail_bound = tail_;
    out.terms_used = terms_;
    out.converged = converged_;
    return out;
  }

 private:
  NeumaierSum sum_;
  double tail_ = 0.0;
  long terms_ = 0;
  bool converged_ = true;
};

std::vector<int> shifted(std::span<const int> base, std::span<const int> shift) {
  std::vector<int> parts(base.begin(), base.end());
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] += shift[i];
  return parts;
}

std::vector<int> right_slot_counts(const std::vector<int>& parts) {
  std::vector<int> slots;
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) slots.push_back(parts[j] - 1);
  slots.push_back(parts.back() - 2);
  return slots;
}

}  // namespace

ConvergenceDisk ConvergenceDisk::make(cplx center, double radius) {
  if (!(center.real() > 0.0)) {
    throw Error(ErrorCode::OutsideDisk, "disk center needs a positive real part");
  }
  const double max_radius = center.real() / 2.0;
  ConvergenceDisk d{center, radius > 0.0 ? radius : max_radius};
  if (!(d.radius <= max_radius)) {
    throw Error(ErrorCode::OutsideDisk, "disk radius exceeds Re(center)/2");
  }
  return d;
}

DiagonalZ::DiagonalZ(cplx alpha, const EvalSettings& settings) : alpha_(alpha), settings_(settings) {
  settings_.validate();
  ComplexParameter::make(alpha, ParamConstraint::RePositive, "alpha");
  if (settings_.method != Method::Sweep) {
    split_.emplace(IteratedIntegralSplit::for_Z(alpha, alpha, settings_.split_point));
  }
}

const SeriesValue& DiagonalZ::operator()(std::span<const int> parts) {
  std::string key(reinterpret_cast<const char*>(parts.data()), parts.size_bytes());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  SeriesValue v;
  if (split_) {
    v = split_->evaluate_index(parts);
    v.converged = v.tail_bound <= effective_tolerance(settings_, alpha_);
  } else {
    v = eval_Z(AdmissibleIndex::validate(parts), alpha_, alpha_, settings_);
  }
  return memo_.emplace(std::move(key), std::move(v)).first->second;
}

SeriesValue eval_S(DiagonalZ& z, const AdmissibleIndex& k, int l) {
  if (l < 0) throw Error(ErrorCode::ParameterDomain, "shift total must be non-negative");
  Accumulator acc;
  for_each_composition(l, k.depth(), [&](std::span<const int> c) {
    const auto parts = shifted(k.parts(), c);
    acc.add(z(parts));
  });
  return acc.result();
}

SeriesValue eval_S(const OhnoSumSpec& spec, const EvalSettings& settings) {
  DiagonalZ z(spec.alpha, settings);
  return eval_S(z, spec.base, spec.shift_total);
}

SeriesValue left_coefficient(DiagonalZ& z, const AdmissibleIndex& k, int l) {
  Accumulator acc;
  for (int i = 0; i <= l; ++i) {
    for_each_composition(i, k.depth() - 1, [&](std::span<const int> p) {
      const InsertionPattern pattern{std::vector<int>(p.begin(), p.end())};
      acc.add(eval_S(z, insert_ones(k, pattern), l - i));
    });
  }
  return acc.result();
}

SeriesValue left_coefficient(const AdmissibleIndex& k, int l, cplx alpha, const EvalSettings& settings) {
  DiagonalZ z(alpha, settings);
  return left_coefficient(z, k, l);
}

SeriesValue right_coefficient(DiagonalZ& z, const AdmissibleIndex& k, int l) {
  const auto slots = right_slot_counts(k.parts());
  const bool has_slots = std::any_of(slots.begin(), slots.end(), [](int s) { return s > 0; });
  Accumulator acc;
  for (int i = 0; i <= l; ++i) {
    if (i > 0 && !has_slots) break;
    for (const auto& dist : enumerate_block_distributions(slots, i)) {
      const auto parts = shifted(k.parts(), dist.block_sums);
      acc.add(eval_S(z, AdmissibleIndex::validate(parts), l - i), static_cast<double>(dist.multiplicity));
    }
  }
  return acc.result();
}

SeriesValue right_coefficient(const AdmissibleIndex& k, int l, cplx alpha, const EvalSettings& settings) {
  DiagonalZ z(alpha, settings);
  return right_coefficient(z, k, l);
}

namespace {

struct TaylorTerms {
  std::vector<cplx> terms;
  double coefficient_tail = 0.0;
};

TaylorTerms taylor_terms(DiagonalZ& z, const AdmissibleIndex& k, const ConvergenceDisk& disk, cplx point,
                         TaylorSide side, int l_max) {
  if (!disk.contains(point)) {
    throw Error(ErrorCode::OutsideDisk, "point lies outside the convergence disk");
  }
  if (l_max < 0) throw Error(ErrorCode::ParameterDomain, "l_max must be non-negative");
  if (z.alpha() != disk.center) throw Error(ErrorCode::ParameterDomain, "evaluator centre differs from the disk");
  const cplx step = disk.center - point;
  TaylorTerms out;
  cplx power = 1.0;
  for (int l = 0; l <= l_max; ++l) {
    const SeriesValue c = (side == TaylorSide::Left) ? left_coefficient(z, k, l)
                                                     : right_coefficient(z, k, l);
    out.terms.push_back(power * c.value);
    out.coefficient_tail += std::abs(power) * c.tail_bound;
    power *= step;
  }
  return out;
}

}  // namespace

std::vector<cplx> taylor_partial_sums(const AdmissibleIndex& k, const ConvergenceDisk& disk, cplx point,
                                      TaylorSide side, int l_max, const EvalSettings& settings) {
  DiagonalZ z(disk.center, settings);
  return taylor_partial_sums(z, k, disk, point, side, l_max);
}

std::vector<cplx> taylor_partial_sums(DiagonalZ& z, const AdmissibleIndex& k, const ConvergenceDisk& disk,
                                      cplx point, TaylorSide side, int l_max) {
  const auto t = taylor_terms(z, k, disk, point, side, l_max);
  std::vector<cplx> sums;
  cplx running = 0.0;
  for (cplx term : t.terms) {
    running += term;
    sums.push_back(running);
  }
  return sums;
}

SeriesValue taylor_eval(const AdmissibleIndex& k, const ConvergenceDisk& disk, cplx point, TaylorSide side,
                        int l_max, const EvalSettings& settings) {
  DiagonalZ z(disk.center, settings);
  return taylor_eval(z, k, disk, point, side, l_max);
}

SeriesValue taylor_eval(DiagonalZ& z, const AdmissibleIndex& k, const ConvergenceDisk& disk, cplx point,
                        TaylorSide side, int l_max) {
  const auto t = taylor_terms(z, k, disk, point, side, l_max);
  NeumaierSum sum;
  for (cplx term : t.terms) sum.add(term);
  double remainder = 0.0;
  std::vector<double> nonzero;
  for (cplx term : t.terms) {
    if (std::abs(term) > 0.0) nonzero.push_back(std::abs(term));
  }
  if (nonzero.size() >= 2 && t.terms.size() >= 2 && std::abs(t.terms.back()) > 0.0) {
    const double last = nonzero.back();
    const double ratio = std::min(0.75, last / nonzero[nonzero.size() - 2]);
    remainder = last * ratio / (1.0 - ratio);
  }
  SeriesValue out;
  out.value = sum.value();
  out.tail_bound = remainder + t.coefficient_tail;
  out.terms_used = l_max + 1;
  out.converged = out.tail_bound <= effective_tolerance(z.settings(), disk.center);
  return out;
}

cplx derivative_of_S(const OhnoSumSpec& spec, int m, const ContourSpec& contour, const EvalSettings& settings) {
  if (!(contour.radius < spec.alpha.real())) {
    throw Error(ErrorCode::RadiusDomain, "contour radius must stay below Re(alpha)");
  }
  return contour_derivative(
      [&](cplx a) {
        DiagonalZ z(a, settings);
        return eval_S(z, spec.base, spec.shift_total).value;
      },
      contour, m);
}

SeriesValue explicit_derivative_expansion(const AdmissibleIndex& k, int l, int m, cplx alpha,
                                          const EvalSettings& settings) {
  if (l < 0 || m < 0) throw Error(ErrorCode::ParameterDomain, "l and m must be non-negative");
  DiagonalZ z(alpha, settings);
  const auto n = static_cast<std::size_t>(k.depth());
  Accumulator acc;
  for_each_composition(l, k.depth(), [&](std::span<const int> c) {
    const auto kp = shifted(k.parts(), c);
    std::vector<int> slots(kp.begin(), kp.end());
    slots.back() -= 1;
    for (int t = 0; t <= m; ++t) {
      for (const auto& dist : enumerate_block_distributions(slots, t)) {
        for_each_composition(m - t, k.depth(), [&](std::span<const int> ins) {
          std::vector<int> parts;
          for (std::size_t j = 0; j < n; ++j) {
            parts.push_back(kp[j] + dist.block_sums[j]);
            if (j + 1 < n) parts.insert(parts.end(), static_cast<std::size_t>(ins[j]), 1);
          }
          acc.add(eval_S(z, AdmissibleIndex::validate(parts), ins[n - 1]),
                  static_cast<double>(dist.multiplicity));
        });
      }
    }
  });
  return acc.result();
}

cplx pochhammer_quotient(cplx beta, int m_first, int m_last) {
  cplx q = 1.0;
  for (int j = m_first; j <= m_last; ++j) q /= beta + static_cast<double>(j);
  return q;
}

cplx pochhammer_quotient_derivative_chain(cplx beta, int m_first, int m_last, int l) {
  // Complete homogeneous sum h_l of 1/(j + beta), j = m_first..m_last.
  std::vector<cplx> h(static_cast<std::size_t>(l) + 1, 0.0);
  h[0] = 1.0;
  for (int j = m_first; j <= m_last; ++j) {
    const cplx x = 1.0 / (beta + static_cast<double>(j));
    for (std::size_t p = 1; p < h.size(); ++p) h[p] += x * h[p - 1];
  }
  return pochhammer_quotient(beta, m_first, m_last) * h.back();
}

namespace {

// sum over lo < u_1 < ... < u_r < hi of prod_q (u_q + beta)^{-exps[q]}.
cplx chain_gap_sum(int lo, int hi, std::span<const int> exps, cplx beta) {
  const std::size_t r = exps.size();
  // dp[q] = sum over increasing u_1 < ... < u_q up to the current point.
  std::vector<cplx> dp(r + 1, 0.0);
  dp[0] = 1.0;
  for (int u = lo + 1; u < hi; ++u) {
    const cplx x = 1.0 / (beta + static_cast<double>(u));
    for (std::size_t q = r; q >= 1; --q) dp[q] += dp[q - 1] * pow_int(x, exps[q - 1]);
  }
  return dp[r];
}

}  // namespace

cplx pochhammer_quotient_derivative_split(cplx beta, std::span<const int> chain, int l) {
  const auto n = chain.size();
  if (n == 0) throw Error(ErrorCode::EmptyIndex, "chain must be non-empty");
  for (std::size_t r = 1; r < n; ++r) {
    if (chain[r] <= chain[r - 1]) throw Error(ErrorCode::ParameterDomain, "chain must be increasing");
  }
  NeumaierSum total;
  for (int i = 0; i <= l; ++i) {
    for_each_composition(i, static_cast<int>(n) - 1, [&](std::span<const int> pattern) {
      const int slots = static_cast<int>(n) + i;
      for_each_composition(l - i, slots, [&](std::span<const int> c) {
        cplx term = 1.0;
        for (std::size_t r = 0; r < n; ++r) {
          term *= pow_int(1.0 / (beta + static_cast<double>(chain[r])), c[r]);
        }
        std::size_t pos = n;
        for (std::size_t p = 0; p + 1 < n; ++p) {
          std::vector<int> exps;
          for (int q = 0; q < pattern[p]; ++q) exps.push_back(c[pos++] + 1);
          term *= chain_gap_sum(chain[p], chain[p + 1], exps, beta);
        }
        total.add(term);
      });
    });
  }
  return pochhammer_quotient(beta, chain.front(), chain.back()) * total.value();
}

cplx power_product(const AdmissibleIndex& k, std::span<const int> chain, cplx beta) {
  const auto n = static_cast<std::size_t>(k.depth());
  if (chain.size() != n) throw Error(ErrorCode::PatternLengthMismatch, "chain length must equal depth");
  cplx p = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const int e = (j + 1 == n) ? k[j] - 1 : k[j];
    p *= pow_int(1.0 / (beta + static_cast<double>(chain[j])), e);
  }
  return p;
}

namespace {

cplx power_product_derivative_with(const AdmissibleIndex& k, std::span<const int> chain, cplx beta, int l,
                                   bool raw) {
  const auto n = static_cast<std::size_t>(k.depth());
  if (chain.size() != n) throw Error(ErrorCode::PatternLengthMismatch, "chain length must equal depth");
  const auto slots = right_slot_counts(k.parts());
  const bool has_slots = std::any_of(slots.begin(), slots.end(), [](int s) { return s > 0; });
  NeumaierSum total;
  for (int i = 0; i <= l; ++i) {
    if (i > 0 && !has_slots) break;
    const auto dists = raw ? enumerate_block_distributions_raw(slots, i) : enumerate_block_distributions(slots, i);
    for (const auto& dist : dists) {
      for_each_composition(l - i, k.depth(), [&](std::span<const int> c) {
        cplx term = static_cast<double>(dist.multiplicity);
        for (std::size_t j = 0; j < n; ++j) {
          const int base = (j + 1 == n) ? k[j] - 1 : k[j];
          term *= pow_int(1.0 / (beta + static_cast<double>(chain[j])), base + dist.block_sums[j] + c[j]);
        }
        total.add(term);
      });
    }
  }
  return total.value();
}

}  // namespace

cplx power_product_derivative(const AdmissibleIndex& k, std::span<const int> chain, cplx beta, int l) {
  return power_product_derivative_with(k, chain, beta, l, false);
}

cplx power_product_derivative_raw(const AdmissibleIndex& k, std::span<const int> chain, cplx beta, int l) {
  return power_product_derivative_with(k, chain, beta, l, true);
}

}  // namespace ohno
