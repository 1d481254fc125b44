#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ohno/errors.hpp"
#include "ohno/integral_oracle.hpp"

using namespace ohno;

namespace {

AdmissibleIndex idx(std::initializer_list<int> parts) { return AdmissibleIndex::validate(parts); }

}  // namespace

TEST(IntegrandSpec, OmegaPositions) {
  const auto spec = IntegrandSpec::from_index(idx({1, 2, 3}), 1.0, 1.0);
  ASSERT_EQ(spec.weight, 6);
  const std::vector<OmegaKind> expected = {OmegaKind::OneOverOneMinusT, OmegaKind::OneOverOneMinusT,
                                           OmegaKind::OneOverT,         OmegaKind::OneOverOneMinusT,
                                           OmegaKind::OneOverT,         OmegaKind::OneOverT};
  EXPECT_EQ(spec.omega, expected);
}

TEST(GaussLegendre, ExactForPolynomials) {
  for (int n : {4, 16, 64}) {
    const auto rule = gauss_legendre(n);
    for (int p = 0; p < 2 * n; p += 3) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], p);
      EXPECT_NEAR(sum, 1.0 / (p + 1), 1e-13) << n << " " << p;
    }
  }
}

TEST(Integral, Examples) {
  EXPECT_NEAR(std::abs(eval_Z_integral(idx({2}), 1.0, 1.0).value - oracle::kZeta2), 0.0, 1e-4);
  EXPECT_NEAR(std::abs(eval_Z_integral(idx({3}), 1.0, 1.0).value - oracle::kZeta3), 0.0, 1e-4);
  EXPECT_NEAR(std::abs(eval_Z_integral(idx({1, 2}), 1.0, 1.0).value - oracle::kZeta3), 0.0, 1e-4);
}

TEST(Integral, DepthOneMatchesPairSum) {
  // Z((k); alpha, beta) = sum_m (m + alpha)^-1 (m + beta)^{-(k-1)}.
  for (cplx a : {cplx(1.0), cplx(1.5), cplx(0.8, 0.4)}) {
    for (cplx b : {cplx(1.0), cplx(0.8), cplx(1.5, -0.3)}) {
      EXPECT_NEAR(std::abs(eval_Z_integral(idx({2}), a, b).value - oracle::direct_pair_sum(1, 1, a, b)), 0.0, 1e-6);
      EXPECT_NEAR(std::abs(eval_Z_integral(idx({3}), a, b).value - oracle::direct_pair_sum(1, 2, a, b)), 0.0, 1e-6);
    }
  }
}

TEST(Integral, AgreesWithSeriesOnGrid) {
  for (const auto& k : admissible_indices_up_to(3)) {
    for (double a : {1.0, 1.5, 0.8}) {
      for (double b : {1.0, 1.5, 0.8}) {
        const auto r = verify_integral_representation(k, a, b);
        EXPECT_LE(r.abs_err, 1e-4) << k.to_string() << " " << a << " " << b;
        EXPECT_TRUE(verify_change_of_variables(k, a, b).pass) << k.to_string() << " " << a << " " << b;
      }
    }
  }
}

TEST(Integral, ChangeOfVariablesExamples) {
  EXPECT_TRUE(verify_change_of_variables(idx({2}), 1.0, 1.0).pass);
  const auto r3 = verify_change_of_variables(idx({3}), 1.0, 1.0);
  EXPECT_TRUE(r3.pass);
  EXPECT_LE(r3.abs_err, 1e-4);
  const auto swapped = verify_change_of_variables(idx({2}), 1.5, 0.8);
  EXPECT_TRUE(swapped.pass);
  EXPECT_LE(swapped.abs_err, 1e-4);
}

TEST(Integral, RefinementDoesNotDrift) {
  for (const auto& k : admissible_indices_up_to(3)) {
    const cplx series = eval_Z(k, 0.8, 1.5).value;
    for (int n : {16, 32}) {
      QuadSettings coarse, fine;
      coarse.nodes = n;
      fine.nodes = 2 * n;
      const auto c = eval_Z_integral(k, 0.8, 1.5, coarse);
      const auto f = eval_Z_integral(k, 0.8, 1.5, fine);
      EXPECT_LE(std::abs(f.value - series), std::abs(c.value - series) + c.tail_bound) << k.to_string() << " " << n;
    }
  }
}

TEST(Integral, Domain) {
  EXPECT_THROW(eval_Z_integral(idx({4}), 1.0, 1.0), Error);
  EXPECT_THROW(eval_Z_integral(idx({2}), 0.4, 1.0), Error);
  EXPECT_THROW(eval_Z_integral(idx({2}), 1.0, 0.4), Error);
  QuadSettings four;
  four.allow_weight4 = true;
  const auto v = eval_Z_integral(idx({4}), 1.0, 1.0, four);
  EXPECT_NEAR(std::abs(v.value - oracle::kZeta4), 0.0, 1e-3);
  EXPECT_THROW(eval_Z_integral(idx({5}), 1.0, 1.0, four), Error);
}
