#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ohno/errors.hpp"
#include "ohno/report_io.hpp"
#include "ohno/verifier.hpp"

using namespace ohno;

namespace {

AdmissibleIndex idx(std::initializer_list<int> parts) { return AdmissibleIndex::validate(parts); }

cplx Z(const AdmissibleIndex& k, cplx a, cplx b) { return eval_Z(k, a, b).value; }

}  // namespace

TEST(Report, PassRule) {
  VerificationReport r;
  r.lhs = 1.0;
  r.rhs = 1.0 + 2e-6;
  r.tol = 1e-6;
  r.combined_tail = 0.0;
  finalize(r);
  EXPECT_FALSE(r.pass);
  r.combined_tail = 3e-6;
  finalize(r);
  EXPECT_TRUE(r.pass);
  r.combined_tail = 0.0;
  r.tol = 5e-6;
  finalize(r);
  EXPECT_TRUE(r.pass);
}

TEST(Report, FailedReportIsNotANumber) {
  const auto r = failed_report("ohno", {{"l", "1"}}, "ParameterDomain: bad");
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(std::isnan(r.abs_err));
  EXPECT_TRUE(std::isnan(r.lhs.real()));
}

TEST(Duality, Examples) {
  const auto r2 = verify_duality(idx({2}), 1.0, 1.0);
  EXPECT_TRUE(r2.pass);
  EXPECT_NEAR(r2.lhs.real(), oracle::kZeta2, 1e-12);

  const auto r3 = verify_duality(idx({3}), 1.0, 1.0);
  EXPECT_TRUE(r3.pass);
  EXPECT_NEAR(std::abs(r3.lhs - oracle::kZeta3), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r3.rhs - oracle::kZeta3), 0.0, 1e-12);

  const auto r23 = verify_duality(idx({2, 3}), 1.2, 0.7);
  EXPECT_TRUE(r23.pass);
  const auto naive = eval_Z_naive(idx({1, 2, 2}), 0.7, 1.2, 1000);
  EXPECT_LE(std::abs(naive.value - r23.rhs), naive.tail_bound + 1e-12);
}

TEST(Duality, DomainErrorsPropagate) {
  EXPECT_THROW(verify_duality(idx({2}), -1.0, 1.0), Error);
  EXPECT_THROW(verify_duality(idx({2}), 1.0, cplx(0.0, 1.0)), Error);
}

TEST(Ohno, Examples) {
  const auto l0 = verify_ohno(idx({1, 3}), 0, 1.5);
  const auto d = verify_duality(idx({1, 3}), 1.5, 1.5);
  EXPECT_TRUE(l0.pass);
  EXPECT_NEAR(std::abs(l0.lhs - d.lhs), 0.0, 1e-15);

  const auto r1 = verify_ohno(idx({3}), 1, 1.0);
  EXPECT_TRUE(r1.pass);
  EXPECT_NEAR(std::abs(r1.lhs - oracle::kZeta4), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r1.rhs - oracle::kZeta4), 0.0, 1e-12);

  const auto r2 = verify_ohno(idx({3}), 1, 2.0);
  EXPECT_TRUE(r2.pass);
  EXPECT_NEAR(std::abs(r2.rhs - oracle::direct_hurwitz(4, 2.0)), 0.0, 1e-11);
}

TEST(Ohno, NaiveAnalogueFails) {
  // zeta(4; 2) differs from 4 Z(1,3; 2) although zeta(4) = 4 zeta(1,3).
  const cplx z4 = oracle::direct_hurwitz(4, 2.0);
  EXPECT_GT(std::abs(z4 - 4.0 * Z(idx({1, 3}), 2.0, 2.0)), 1e-2);
  EXPECT_NEAR(std::abs(oracle::kZeta4 - 4.0 * Z(idx({1, 3}), 1.0, 1.0)), 0.0, 1e-12);
}

TEST(SumFormulaAlpha, Examples) {
  const auto a = verify_sum_formula_alpha(1, 2, 1.0);
  EXPECT_TRUE(a.pass);
  EXPECT_NEAR(a.rhs.real(), oracle::kZeta2, 1e-12);
  const auto b = verify_sum_formula_alpha(2, 3, 1.0);
  EXPECT_TRUE(b.pass);
  EXPECT_NEAR(std::abs(b.lhs - oracle::kZeta3), 0.0, 1e-12);
  const auto c = verify_sum_formula_alpha(2, 4, 1.5);
  EXPECT_TRUE(c.pass);
  EXPECT_NEAR(std::abs(c.lhs - oracle::direct_hurwitz(4, 1.5)), 0.0, 1e-11);
  EXPECT_NEAR(std::abs(c.lhs - verify_ohno(idx({3}), 1, 1.5).rhs), 0.0, 1e-13);
  EXPECT_THROW(verify_sum_formula_alpha(3, 3, 1.0), Error);
}

TEST(SumFormulaTwoParam, Examples) {
  const auto a = verify_sum_formula_two_param(1, 1, 1.0, 1.0);
  EXPECT_TRUE(a.pass);
  EXPECT_NEAR(a.lhs.real(), oracle::kZeta2, 1e-12);
  const auto b = verify_sum_formula_two_param(1, 2, 2.0, 1.0);
  EXPECT_TRUE(b.pass);
  EXPECT_NEAR(std::abs(b.lhs - oracle::direct_pair_sum(1, 2, 2.0, 1.0)), 0.0, 1e-10);
  ASSERT_EQ(admissible_indices(3, 2).size(), 1u);
  const auto c = verify_sum_formula_two_param(2, 1, 1.0, 2.0);
  EXPECT_TRUE(c.pass);
  EXPECT_NEAR(std::abs(c.lhs - Z(idx({1, 2}), 1.0, 2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.rhs - oracle::direct_pair_sum(2, 1, 1.0, 2.0)), 0.0, 1e-10);
}

TEST(CoefficientDuality, Examples) {
  EXPECT_TRUE(verify_coefficient_duality(idx({2, 2}), 0, 1.0).pass);
  const auto r = verify_coefficient_duality(idx({1, 2}), 1, 1.0);
  EXPECT_TRUE(r.pass);
  const cplx expected_left = eval_S({idx({1, 2}), 1, 1.0}).value + eval_S({idx({1, 1, 2}), 0, 1.0}).value;
  EXPECT_NEAR(std::abs(r.lhs - expected_left), 0.0, 1e-14);
  EXPECT_TRUE(verify_coefficient_duality(idx({2, 3}), 1, 1.3).pass);
}

TEST(CoefficientDerivatives, Examples) {
  for (auto form : {CoefficientForm::Right, CoefficientForm::Left}) {
    const auto m0 = verify_coefficient_derivatives(idx({1, 3}), 0, 1.2, form);
    EXPECT_TRUE(m0.pass);
    EXPECT_NEAR(std::abs(m0.lhs - Z(idx({1, 3}), 1.2, 1.2)), 0.0, 1e-15);
    const auto a = verify_coefficient_derivatives(idx({2}), 1, 1.0, form);
    EXPECT_TRUE(a.pass);
    EXPECT_LE(a.abs_err, 1e-5);
    const auto b = verify_coefficient_derivatives(idx({1, 2}), 1, 1.5, form);
    EXPECT_TRUE(b.pass);
    EXPECT_LE(b.abs_err, 1e-5);
  }
}

TEST(CoefficientDerivatives, RightSideMatchesFiniteDifference) {
  // The right coefficient of order 1 is -d/dbeta Z(k; alpha, beta) at beta = alpha.
  const auto k = idx({1, 2});
  const auto r = verify_coefficient_derivatives(k, 1, 1.5, CoefficientForm::Right);
  const auto fd = oracle::central_difference([&](cplx b) { return Z(k, 1.5, b); }, 1.5);
  EXPECT_NEAR(std::abs(r.rhs + fd), 0.0, 1e-6);
}

TEST(InsertionDifferences, Examples) {
  EXPECT_TRUE(verify_insertion_differences(idx({2, 2}), 0, 1.0).pass);
  const auto a = verify_insertion_differences(idx({3}), 1, 1.0);
  EXPECT_TRUE(a.pass);
  EXPECT_LE(a.abs_err, 1e-5);
  const auto b = verify_insertion_differences(idx({1, 2}), 2, 2.0);
  EXPECT_TRUE(b.pass);
  EXPECT_LE(b.abs_err, 1e-4);
}

TEST(DerivativeDuality, Examples) {
  const auto m0 = verify_derivative_duality(idx({3}), 1, 0, 1.0);
  EXPECT_TRUE(m0.pass);
  EXPECT_NEAR(std::abs(m0.lhs - verify_ohno(idx({3}), 1, 1.0).lhs), 0.0, 1e-14);

  const auto a = verify_derivative_duality(idx({3}), 0, 1, 1.0);
  EXPECT_TRUE(a.pass);
  const auto fd3 = oracle::central_difference([](cplx x) { return Z(idx({3}), x, x); }, 1.0);
  const auto fd12 = oracle::central_difference([](cplx x) { return Z(idx({1, 2}), x, x); }, 1.0);
  EXPECT_LE(std::abs(a.lhs - fd3) / std::abs(fd3), 1e-5);
  EXPECT_LE(std::abs(a.rhs - fd12) / std::abs(fd12), 1e-5);

  const auto b = verify_derivative_duality(idx({3}), 1, 1, 1.5);
  EXPECT_TRUE(b.pass);
  EXPECT_LE(b.abs_err, 1e-5);
}

TEST(MixedPartialDuality, Examples) {
  EXPECT_TRUE(verify_mixed_partial_duality(idx({2, 2}), 0, 0, 1.0).pass);

  const auto a = verify_mixed_partial_duality(idx({3}), 1, 0, 1.0);
  EXPECT_TRUE(a.pass);
  const auto fd_a = oracle::central_difference([](cplx x) { return Z(idx({3}), x, 1.0); }, 1.0);
  EXPECT_LE(std::abs(a.lhs - fd_a) / std::abs(fd_a), 1e-5);

  const auto b = verify_mixed_partial_duality(idx({1, 2}), 0, 1, 1.2);
  EXPECT_TRUE(b.pass);
  const auto fd_b = oracle::central_difference([](cplx y) { return Z(idx({1, 2}), 1.2, y); }, 1.2);
  EXPECT_LE(std::abs(b.lhs - fd_b) / std::abs(fd_b), 1e-5);

  const auto mixed = verify_mixed_partial_duality(idx({1, 2}), 1, 1, 1.0);
  EXPECT_TRUE(mixed.pass);
  const double h = 1e-3;
  auto f = [](double x, double y) { return Z(idx({1, 2}), x, y); };
  const cplx fd_mixed = (f(1 + h, 1 + h) - f(1 + h, 1 - h) - f(1 - h, 1 + h) + f(1 - h, 1 - h)) / (4 * h * h);
  EXPECT_LE(std::abs(mixed.lhs - fd_mixed) / std::abs(fd_mixed), 1e-5);

  EXPECT_THROW(verify_mixed_partial_duality(idx({2}), 2, 1, 1.0), Error);
}

TEST(ShiftedDerivativeDuality, Examples) {
  const auto l0 = verify_shifted_derivative_duality(idx({1, 3}), 0, 1.0);
  EXPECT_TRUE(l0.pass);
  EXPECT_NEAR(std::abs(l0.lhs - verify_ohno(idx({1, 3}), 0, 1.0).lhs), 0.0, 1e-15);
  const auto a = verify_shifted_derivative_duality(idx({3}), 1, 1.0);
  EXPECT_TRUE(a.pass);
  EXPECT_LE(a.abs_err, 1e-5);
  const auto b = verify_shifted_derivative_duality(idx({1, 2}), 2, 1.5);
  EXPECT_TRUE(b.pass);
  EXPECT_LE(b.abs_err, 1e-4);
}

TEST(HurwitzSumIdentity, Examples) {
  const auto a = verify_hurwitz_sum_identity(2, 1, 1.0);
  EXPECT_TRUE(a.pass);
  EXPECT_NEAR(std::abs(a.lhs - oracle::kZeta2), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(a.rhs - oracle::kZeta2), 0.0, 1e-8);
  const auto b = verify_hurwitz_sum_identity(3, 1, 1.0);
  EXPECT_TRUE(b.pass);
  EXPECT_NEAR(std::abs(b.lhs - oracle::kZeta3), 0.0, 1e-10);
  const auto c = verify_hurwitz_sum_identity(4, 2, 1.5);
  EXPECT_TRUE(c.pass);
  EXPECT_LE(c.abs_err, 1e-4);
  EXPECT_THROW(verify_hurwitz_sum_identity(6, 1, 1.0), Error);
  EXPECT_THROW(verify_hurwitz_sum_identity(3, 3, 1.0), Error);
}

TEST(HurwitzSumIdentity, RightSideAtOneIsDirectSum) {
  // At alpha = 1 the summand is 1/(l - x), so the right side is zeta(weight) for n = 1.
  const auto r = verify_hurwitz_sum_identity(5, 1, 1.0);
  EXPECT_NEAR(std::abs(r.rhs - oracle::kZeta5), 0.0, 1e-9);
}

TEST(VerifyRelation, DispatchAndErrors) {
  RelationRequest q;
  q.relation = "ohno";
  q.index = idx({3});
  q.l = 1;
  EXPECT_TRUE(verify_relation(q).pass);
  q.relation = "nope";
  EXPECT_THROW(verify_relation(q), Error);
  RelationRequest missing;
  missing.relation = "duality";
  EXPECT_THROW(verify_relation(missing), Error);
  for (const auto& name : relation_names()) EXPECT_FALSE(name.empty());
}

TEST(Sweep, EmptyGrid) {
  SweepGrid grid;
  grid.relations = {"duality", "ohno"};
  grid.max_weight = 0;
  grid.alphas = {1.0};
  EXPECT_TRUE(sweep(grid).reports.empty());
  grid.max_weight = 4;
  grid.alphas.clear();
  EXPECT_TRUE(sweep(grid).reports.empty());
}

TEST(Sweep, SmallGridPassesWithClosure) {
  SweepGrid grid;
  grid.relations = {"duality", "ohno", "coefficient_duality"};
  grid.max_weight = 4;
  grid.max_order = 1;
  grid.alphas = {1.0};
  const auto result = sweep(grid);
  EXPECT_EQ(result.failed, 0u);
  EXPECT_EQ(result.passed, result.reports.size());
  std::size_t ohno = 0, closure = 0;
  for (const auto& r : result.reports) {
    ohno += r.relation_id == "ohno";
    closure += r.relation_id == "ohno_closure";
  }
  EXPECT_EQ(ohno, 7u * 2u);
  EXPECT_EQ(closure, 7u);
}

TEST(Sweep, DomainErrorsBecomeReports) {
  SweepGrid grid;
  grid.relations = {"ohno"};
  grid.max_weight = 3;
  grid.alphas = {-1.0, 1.0};
  const auto result = sweep(grid);
  ASSERT_FALSE(result.reports.empty());
  std::size_t flagged = 0;
  for (const auto& r : result.reports) {
    if (r.error.rfind("ParameterDomain", 0) == 0) ++flagged;
  }
  EXPECT_EQ(flagged, 3u);
  EXPECT_EQ(result.passed, 3u);
}

TEST(Sweep, ClosureFailsWhenDependencyFails) {
  SweepGrid grid;
  grid.relations = {"ohno"};
  grid.min_weight = 3;
  grid.max_weight = 3;
  grid.max_order = 1;
  grid.alphas = {-0.5};
  const auto result = sweep(grid);
  std::size_t closures = 0;
  for (const auto& r : result.reports) {
    if (r.relation_id != "ohno_closure") continue;
    ++closures;
    EXPECT_FALSE(r.pass);
    EXPECT_GT(r.lhs.real(), r.rhs.real());
  }
  EXPECT_EQ(closures, 2u);
}

TEST(Sweep, DeterministicOutput) {
  SweepGrid grid;
  grid.relations = {"duality", "sum_formula_alpha", "hurwitz_sum_identity"};
  grid.max_weight = 4;
  grid.alphas = {1.0, cplx(0.8, 0.3)};
  const auto a = sweep(grid), b = sweep(grid);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    EXPECT_EQ(report_to_json(a.reports[i]), report_to_json(b.reports[i]));
  }
}

TEST(Sweep, PassIsMonotoneInTolerance) {
  SweepGrid grid;
  grid.relations = {"duality", "ohno"};
  grid.max_weight = 4;
  grid.alphas = {1.0};
  for (double tol : {1e-18, 1e-16, 1e-15}) {
    VerifySettings lo, hi;
    lo.tol = tol;
    hi.tol = tol * 10.0;
    const auto a = sweep(grid, lo), b = sweep(grid, hi);
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
      if (a.reports[i].pass) EXPECT_TRUE(b.reports[i].pass);
    }
  }
}
