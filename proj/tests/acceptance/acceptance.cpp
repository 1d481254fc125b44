// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "ohno/contour.hpp"
#include "ohno/integral_oracle.hpp"
#include "ohno/ohno_sums.hpp"
#include "ohno/verifier.hpp"

using namespace ohno;

namespace {

AdmissibleIndex idx(std::initializer_list<int> parts) { return AdmissibleIndex::validate(parts); }

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst = 0.0;
  std::string first_failure;

  void expect(bool ok, double err, const std::string& what) {
    ++checks;
    if (err == err && err > worst) worst = err;
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
  void expect_close(cplx a, cplx b, double tol, const std::string& what) {
    const double err = std::abs(a - b);
    expect(err <= tol, err, what + " err=" + std::to_string(err));
  }
  void report(const VerificationReport& r) {
    std::string what = r.relation_id;
    for (const auto& [k, v] : r.inputs) what += " " + k + "=" + v;
    if (!r.error.empty()) what += " error: " + r.error;
    expect(r.pass, r.relation_id == "ohno_closure" ? 0.0 : r.abs_err, what);
  }
};

int g_failed = 0;

void criterion(int number, const char* title, const std::function<void(Tally&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, 0.0, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = t.failures == 0 && t.checks > 0;
  if (!ok) ++g_failed;
  std::printf("%s %2d %s (%zu checks, worst err %.2e, %.1fs)", ok ? "PASS" : "FAIL", number, title, t.checks, t.worst,
              seconds);
  if (!ok) std::printf(" [%zu failed; first: %s]", t.failures, t.first_failure.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

// Classical closed forms of multiple zeta values up to weight 5, with the
// largest summation variable carrying the last entry.
std::map<std::vector<int>, double> known_mzv() {
  const double z2 = oracle::kZeta2, z3 = oracle::kZeta3, z4 = oracle::kZeta4, z5 = oracle::kZeta5;
  return {
      {{2}, z2},
      {{3}, z3},
      {{1, 2}, z3},
      {{4}, z4},
      {{1, 3}, z4 / 4.0},
      {{2, 2}, 0.75 * z4},
      {{1, 1, 2}, z4},
      {{5}, z5},
      {{1, 4}, 2.0 * z5 - z2 * z3},
      {{2, 3}, 3.0 * z2 * z3 - 5.5 * z5},
      {{3, 2}, 4.5 * z5 - 2.0 * z2 * z3},
      {{1, 1, 3}, 2.0 * z5 - z2 * z3},
      {{1, 2, 2}, 3.0 * z2 * z3 - 5.5 * z5},
      {{2, 1, 2}, 4.5 * z5 - 2.0 * z2 * z3},
      {{1, 1, 1, 2}, z5},
  };
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

int main() {
  criterion(1, "Z(k;1,1) equals the multiple zeta value, weight <= 5", [](Tally& t) {
    EvalSettings series;
    series.max_terms = 100000;
    EvalSettings other_cut = series;
    other_cut.split_point = 0.3;
    const auto table = known_mzv();
    for (const auto& k : admissible_indices_up_to(5)) {
      const cplx z = eval_Z(k, 1.0, 1.0, series).value;
      const cplx mz = eval_multiple_hurwitz(k, 1.0, other_cut).value;
      t.expect_close(z, mz, 1e-6, "Z vs multiple Hurwitz at " + k.to_string());
      t.expect_close(z, table.at(k.parts()), 1e-6, "Z vs closed form at " + k.to_string());
    }
  });

  criterion(2, "zeta(4) = 4 Z(1,3;1,1), zeta(4;a) = Z(2,2;a)+Z(1,3;a) = Z(1,1,2;a), zeta(4;2) != 4 Z(1,3;2)",
            [](Tally& t) {
              t.expect_close(oracle::kZeta4, 4.0 * eval_Z(idx({1, 3}), 1.0, 1.0).value, 1e-6, "zeta(4)");
              for (cplx a : {cplx(1.0), cplx(2.0), cplx(0.7, 0.3)}) {
                const cplx z4 = oracle::direct_hurwitz(4, a);
                t.expect_close(z4, eval_hurwitz(4, a).value, 1e-6, "hurwitz");
                const cplx pair = eval_Z(idx({2, 2}), a, a).value + eval_Z(idx({1, 3}), a, a).value;
                t.expect_close(z4, pair, 1e-6, "Z(2,2)+Z(1,3)");
                t.expect_close(z4, eval_Z(idx({1, 1, 2}), a, a).value, 1e-6, "Z(1,1,2)");
              }
              const double gap = std::abs(oracle::direct_hurwitz(4, 2.0) - 4.0 * eval_Z(idx({1, 3}), 2.0, 2.0).value);
              t.expect(gap > 1e-2, 0.0, "naive analogue gap " + std::to_string(gap));
            });

  criterion(3, "duality Z(k;a,b) = Z(k';b,a), weight <= 6", [](Tally& t) {
    const std::vector<cplx> params = {1.0, 1.5, cplx(0.8, 0.4)};
    for (const auto& k : admissible_indices_up_to(6)) {
      for (cplx a : params) {
        for (cplx b : params) t.report(verify_duality(k, a, b));
      }
    }
  });

  criterion(4, "Ohno relation S_l(k;a) = S_l(k';a), weight <= 5, l <= 3, with odd-l closure", [](Tally& t) {
    SweepGrid grid;
    grid.relations = {"ohno"};
    grid.max_weight = 5;
    grid.max_order = 3;
    grid.alphas = {1.0, 1.5, 2.0, cplx(0.8, 0.3)};
    const auto result = sweep(grid);
    for (const auto& r : result.reports) t.report(r);
  });

  criterion(5, "sum formulas for Z(k;a) and Z(k;a,b)", [](Tally& t) {
    for (int n = 2; n <= 6; ++n) {
      for (int m = 1; m < n; ++m) {
        for (cplx a : {cplx(1.0), cplx(1.7)}) t.report(verify_sum_formula_alpha(m, n, a));
      }
    }
    const std::vector<std::pair<cplx, cplx>> points = {{1.0, 1.0}, {2.0, 1.0}, {1.2, 0.7}};
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 3; ++n) {
        for (const auto& [a, b] : points) t.report(verify_sum_formula_two_param(m, n, a, b));
      }
    }
  });

  criterion(6, "Taylor expansions on the disk, L = 16, |a - b0| = Re(b0)/4, geometric decay", [](Tally& t) {
    for (double b0 : {1.0, 2.0}) {
      const auto disk = ConvergenceDisk::make(b0);
      DiagonalZ z(b0, EvalSettings{});
      for (double theta : {0.0, 2.0 * std::numbers::pi / 3.0, 4.0 * std::numbers::pi / 3.0}) {
        const cplx point = b0 + (b0 / 4.0) * std::polar(1.0, theta);
        for (const auto& k : admissible_indices_up_to(4)) {
          for (auto side : {TaylorSide::Left, TaylorSide::Right}) {
            const cplx direct = side == TaylorSide::Left ? eval_Z(k, point, b0).value : eval_Z(k, b0, point).value;
            const auto sums = taylor_partial_sums(z, k, disk, point, side, 16);
            const std::string where = k.to_string() + (side == TaylorSide::Left ? " left" : " right");
            t.expect_close(sums[16], direct, 1e-6, where);
            for (int L = 4; L <= 12; L += 4) {
              const double e0 = std::abs(sums[L] - direct), e1 = std::abs(sums[L + 4] - direct);
              t.expect(e1 < e0 || e1 < 1e-12, 0.0, where + " no decay at L=" + std::to_string(L));
            }
          }
        }
      }
    }
  });

  criterion(7, "derivative identities: closed forms vs contour, derivative and mixed-partial duality", [](Tally& t) {
    for (int l = 1; l <= 2; ++l) {
      const double scale = (l % 2 ? -1.0 : 1.0) / factorial(l);
      for (int m1 = 0; m1 <= 1; ++m1) {
        for (int mn = 2; mn <= 3; ++mn) {
          for (double beta : {1.0, 1.5}) {
            const ContourSpec c{beta, 0.5, 64};
            const cplx ref = scale * contour_derivative([&](cplx b) { return pochhammer_quotient(b, m1, mn); }, c, l);
            const cplx chain = pochhammer_quotient_derivative_chain(beta, m1, mn, l);
            t.expect(std::abs(chain - ref) <= 1e-8 * std::abs(ref), std::abs(chain - ref), "pochhammer chain");
            std::vector<std::vector<int>> chains = {{m1, mn}};
            for (int mid = m1 + 1; mid < mn; ++mid) chains.push_back({m1, mid, mn});
            for (const auto& ch : chains) {
              const cplx split = pochhammer_quotient_derivative_split(beta, ch, l);
              t.expect(std::abs(split - ref) <= 1e-8 * std::abs(ref), std::abs(split - ref), "pochhammer split");
            }
          }
        }
      }
    }
    for (const auto& k : admissible_indices_up_to(4)) {
      std::vector<int> chain;
      for (int j = 0; j < k.depth(); ++j) chain.push_back(2 * j + 1);
      for (int l = 0; l <= 2; ++l) {
        const double scale = (l % 2 ? -1.0 : 1.0) / factorial(l);
        for (double beta : {1.0, 1.5}) {
          const ContourSpec c{beta, 0.5, 64};
          const cplx ref = scale * contour_derivative([&](cplx b) { return power_product(k, chain, b); }, c, l);
          const cplx block = power_product_derivative(k, chain, beta, l);
          t.expect(std::abs(block - ref) <= 1e-8 * std::abs(ref), std::abs(block - ref), "power product");
        }
      }
      for (double a : {1.0, 1.5}) {
        const auto c = ContourSpec::around_parameter(a);
        for (int l = 0; l <= 1; ++l) {
          for (int m = 0; m <= 2; ++m) {
            const cplx ref = ((m % 2) ? -1.0 : 1.0) / factorial(m) * derivative_of_S({k, l, a}, m, c);
            t.expect_close(explicit_derivative_expansion(k, l, m, a).value, ref, 1e-8,
                           "explicit derivative " + k.to_string());
          }
        }
      }
    }
    DiagonalZCache cache{EvalSettings{}};
    for (const auto& k : admissible_indices_up_to(4)) {
      for (cplx a : {cplx(1.0), cplx(1.5)}) {
        for (int l = 0; l <= 2; ++l) {
          for (int m = 0; m <= 2; ++m) t.report(verify_derivative_duality(cache, k, l, m, a));
        }
        for (int total = 0; total <= 2; ++total) {
          for (int m = 0; m <= total; ++m) t.report(verify_mixed_partial_duality(k, m, total - m, a));
        }
      }
    }
  });

  criterion(8, "coefficient duality, coefficient derivatives and insertion differences", [](Tally& t) {
    DiagonalZCache cache{EvalSettings{}};
    for (const auto& k : admissible_indices_up_to(4)) {
      for (int l = 0; l <= 2; ++l) {
        for (cplx a : {cplx(1.0), cplx(1.5), cplx(0.8, 0.3)}) t.report(verify_coefficient_duality(cache, k, l, a));
      }
    }
    for (const auto& k : admissible_indices_up_to(3)) {
      for (int m = 0; m <= 2; ++m) {
        for (cplx b : {cplx(1.0), cplx(1.5), cplx(2.0)}) {
          t.report(verify_coefficient_derivatives(cache, k, m, b, CoefficientForm::Right));
          t.report(verify_coefficient_derivatives(cache, k, m, b, CoefficientForm::Left));
          t.report(verify_insertion_differences(cache, k, m, b));
        }
      }
    }
  });

  criterion(9, "iterated integral agrees with the series and with the reflected integral, weight <= 3", [](Tally& t) {
    for (const auto& k : admissible_indices_up_to(3)) {
      for (double a : {1.0, 1.5, 0.8}) {
        for (double b : {1.0, 1.5, 0.8}) {
          const auto integral = eval_Z_integral(k, a, b);
          t.expect_close(integral.value, eval_Z(k, a, b).value, 1e-4, "integral " + k.to_string());
          t.report(verify_change_of_variables(k, a, b));
        }
      }
    }
  });

  criterion(10, "shifted derivative duality and the multiple Hurwitz sum identity", [](Tally& t) {
    DiagonalZCache cache{EvalSettings{}};
    for (const auto& k : admissible_indices_up_to(4)) {
      for (int l = 0; l <= 2; ++l) {
        for (cplx a : {cplx(1.0), cplx(1.5)}) t.report(verify_shifted_derivative_duality(cache, k, l, a));
      }
    }
    for (auto [w, n] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 2}}) {
      for (cplx a : {cplx(1.0), cplx(1.5)}) t.report(verify_hurwitz_sum_identity(w, n, a));
    }
  });

  criterion(11, "dual involution, weight = depth + dual depth (weight <= 10), composition counts", [](Tally& t) {
    for (const auto& k : admissible_indices_up_to(10)) {
      const auto d = dual(k);
      t.expect(dual(d) == k, 0.0, "involution " + k.to_string());
      t.expect(k.depth() + d.depth() == k.weight() && d.weight() == k.weight(), 0.0, "weight " + k.to_string());
    }
    for (int total = 0; total <= 8; ++total) {
      for (int len = 1; len <= 6; ++len) {
        const auto expected = binomial(total + len - 1, len - 1);
        t.expect(enumerate_compositions(total, len).size() == expected, 0.0, "compositions");
        t.expect(composition_count(total, len) == expected, 0.0, "composition_count");
      }
    }
    const std::vector<std::vector<int>> shapes = {{1}, {2, 0}, {1, 2}, {0, 3, 1}, {2, 2, 2}, {3, 0, 0, 2}};
    for (const auto& slots : shapes) {
      int s = 0;
      for (int x : slots) s += x;
      for (int total = 0; total <= 6; ++total) {
        std::uint64_t sum = 0;
        for (const auto& d : enumerate_block_distributions(slots, total)) {
          std::uint64_t product = 1;
          for (std::size_t j = 0; j < slots.size(); ++j) {
            if (slots[j] > 0) product *= binomial(d.block_sums[j] + slots[j] - 1, slots[j] - 1);
          }
          t.expect(product == d.multiplicity, 0.0, "block multiplicity");
          sum += d.multiplicity;
        }
        t.expect(sum == binomial(total + s - 1, s - 1), 0.0, "block distribution count");
        t.expect(enumerate_block_distributions_raw(slots, total).size() ==
                     enumerate_block_distributions(slots, total).size(),
                 0.0, "raw distribution count");
      }
    }
  });

  criterion(12, "series evaluator vs literal nested sums within combined tails, depth <= 3, weight <= 5",
            [](Tally& t) {
              const std::vector<cplx> params = {1.0, 2.0, cplx(1.5, 0.5)};
              for (const auto& k : admissible_indices_up_to(5)) {
                if (k.depth() > 3) continue;
                for (cplx a : params) {
                  for (cplx b : params) {
                    const auto z = eval_Z(k, a, b);
                    const auto naive = eval_Z_naive(k, a, b, 1000);
                    const double err = std::abs(z.value - naive.value);
                    t.expect(err <= z.tail_bound + naive.tail_bound, err, "naive " + k.to_string());
                  }
                }
              }
            });

  return g_failed == 0 ? 0 : 1;
}
