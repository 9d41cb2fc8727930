#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures/eval_fixtures.hpp"
#include "mfpoly/eval.hpp"

namespace mfpoly {
namespace {

TEST(SqrtLambda, PrincipalBranch) {
  EXPECT_EQ(sqrt_lambda({-1.0, 0.0}), Complex(0.0, 1.0));
  EXPECT_EQ(sqrt_lambda({4.0, 0.0}), Complex(2.0, 0.0));
  const Complex root = sqrt_lambda({0.0, 1.0});
  EXPECT_NEAR(root.real(), std::cos(std::numbers::pi / 4), 1e-15);
  EXPECT_NEAR(root.imag(), std::sin(std::numbers::pi / 4), 1e-15);
  EXPECT_THROW(sqrt_lambda({0.0, 0.0}), DomainError);
}

TEST(Digamma, ClassicalValues) {
  EXPECT_NEAR(digamma({1.0, 0.0}).real(), -kEulerGamma, 1e-14);
  EXPECT_NEAR(digamma({2.0, 0.0}).real(), 1.0 - kEulerGamma, 1e-14);
  EXPECT_NEAR(digamma({0.5, 0.0}).real(), -kEulerGamma - 2.0 * std::log(2.0), 1e-13);
  EXPECT_NEAR(digamma({1.0, 0.0}).imag(), 0.0, 1e-15);
}

TEST(Digamma, RecurrenceIdentity) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> coord(-20.0, 20.0);
  int tested = 0;
  while (tested < 200) {
    const Complex z(coord(rng), coord(rng));
    if (std::abs(z) < 0.5) continue;
    // stay away from the poles on the nonpositive real axis
    if (std::abs(z.imag()) < 0.1 && z.real() < 0.5 &&
        std::abs(z.real() - std::round(z.real())) < 0.1) {
      continue;
    }
    const Complex diff = digamma(z + 1.0) - digamma(z) - 1.0 / z;
    EXPECT_LE(std::abs(diff), 1e-12 * std::max(1.0, std::abs(1.0 / z))) << "z=" << z;
    ++tested;
  }
}

TEST(Digamma, ReflectionIdentity) {
  auto check = [](Complex z) {
    const Complex lhs = digamma(1.0 - z) - digamma(z);
    const Complex pi_z = std::numbers::pi * z;
    const Complex rhs = std::numbers::pi * std::cos(pi_z) / std::sin(pi_z);
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(rhs))) << "z=" << z;
  };
  for (int k = 0; k <= 27; ++k) check({-4.5 + k / 3.0, 0.0});
  for (double x : {-2.2, -0.3, 1.7}) check({x, 0.6});
}

TEST(Digamma, PoleRejected) {
  EXPECT_THROW(digamma({0.0, 0.0}), DomainError);
  EXPECT_THROW(digamma({-3.0, 0.0}), DomainError);
  EXPECT_THROW(digamma({-3.0, 1e-14}), DomainError);
  EXPECT_NO_THROW(digamma({-3.0, 1e-6}));
}

TEST(MFunction, HighPrecisionFixtureSinglePoint) {
  const MFunctionEvaluator evaluator({.ell = 0, .a = 1.0});
  const Complex v = evaluator.original({-1.0, 0.5});
  const Complex expected(-1.2295616690998539411, 0.93094571820525035942);
  EXPECT_LE(std::abs(v - expected), 1e-12 * std::abs(expected));
}

TEST(MFunction, HighPrecisionFixtureGrid) {
  for (int ell = 0; ell <= 4; ++ell) {
    const MFunctionEvaluator evaluator({.ell = ell, .a = testing::kFixtureCoupling});
    for (const auto& row : testing::kMFunctionFixtures) {
      if (row.ell != ell) continue;
      const Complex v = evaluator.original({row.lambda_re, row.lambda_im});
      const Complex expected(row.m_re, row.m_im);
      EXPECT_LE(std::abs(v - expected), 1e-9 * std::abs(expected))
          << "ell=" << row.ell << " lambda=(" << row.lambda_re << "," << row.lambda_im << ")";
    }
  }
}

TEST(MFunction, SimplifiedMatchesOriginal) {
  for (int ell = 0; ell <= 4; ++ell) {
    const MFunctionEvaluator evaluator({.ell = ell, .a = testing::kFixtureCoupling});
    for (const auto& row : testing::kMFunctionFixtures) {
      if (row.ell != ell) continue;
      const Complex lambda(row.lambda_re, row.lambda_im);
      const Complex vo = evaluator.original(lambda);
      const Complex vs = evaluator.simplified(lambda);
      EXPECT_LE(std::abs(vo - vs), 1e-10 * std::abs(vo)) << "ell=" << ell << " lambda=" << lambda;
    }
  }
}

TEST(MFunction, RealOnNegativeAxisForEllZero) {
  const MFunctionEvaluator evaluator({.ell = 0, .a = 1.0});
  const Complex v = evaluator.original({-4.0, 0.0});
  EXPECT_NEAR(v.real(), -3.4548648111364841704, 1e-12);
  EXPECT_LE(std::abs(v.imag()), 1e-12);
}

TEST(MFunction, ZeroCouplingReducesToKTimesRoot) {
  const MFunctionEvaluator evaluator({.ell = 1, .a = 0.0});
  for (const Complex lambda : {Complex(1.3, 0.8), Complex(-2.0, 0.4), Complex(0.7, 0.0)}) {
    const Complex s = sqrt_lambda(lambda);
    const Complex expected = lambda / 9.0 * Complex(0.0, 1.0) * s;  // k1|_{a=0} * i s
    EXPECT_LE(std::abs(evaluator.simplified(lambda) - expected), 1e-13 * std::abs(expected));
    EXPECT_LE(std::abs(evaluator.original(lambda) - expected), 1e-13 * std::abs(expected));
  }
  // below the axis the value is the reflection of the one above
  const Complex lambda(0.2, -3.1);
  const Complex expected = std::conj(std::conj(lambda) / 9.0 * Complex(0.0, 1.0) *
                                     sqrt_lambda(std::conj(lambda)));
  EXPECT_LE(std::abs(evaluator.simplified(lambda) - expected), 1e-13 * std::abs(expected));
}

TEST(MFunction, ConjugateSymmetry) {
  for (int ell = 0; ell <= 4; ++ell) {
    const MFunctionEvaluator evaluator({.ell = ell, .a = testing::kFixtureCoupling});
    for (const auto& row : testing::kMFunctionFixtures) {
      if (row.ell != ell || row.lambda_im <= 0.0) continue;
      const Complex lambda(row.lambda_re, row.lambda_im);
      for (const bool simplified : {false, true}) {
        const Complex upper = simplified ? evaluator.simplified(lambda) : evaluator.original(lambda);
        const Complex lower = simplified ? evaluator.simplified(std::conj(lambda))
                                         : evaluator.original(std::conj(lambda));
        EXPECT_LE(std::abs(lower - std::conj(upper)), 1e-10 * std::abs(upper));
      }
    }
  }
}

TEST(PoleScan, UnitCouplingCases) {
  // ell=0: the n=1 candidate pole is live
  const auto scan0 = pole_scan({.ell = 0, .a = 1.0}, 2);
  ASSERT_EQ(scan0.size(), 2u);
  EXPECT_GT(scan0[0].abs_m, 1e4);

  // ell=1: n=1 is cancelled by the k zero, n=2 is live
  const auto scan1 = pole_scan({.ell = 1, .a = 1.0}, 2);
  EXPECT_LT(scan1[0].abs_m, 1e4);
  EXPECT_GT(scan1[1].abs_m, 1e4);
}

TEST(PoleScan, MatchesHighPrecisionFixtures) {
  for (int ell : {0, 4}) {
    const auto scan = pole_scan({.ell = ell, .a = 20.0}, 8);
    for (const auto& fixture : testing::kPoleProbeFixtures) {
      if (fixture.ell != ell) continue;
      const double mine = scan[fixture.n - 1].abs_m;
      EXPECT_LE(std::abs(mine - fixture.abs_m), 1e-6 * fixture.abs_m)
          << "ell=" << ell << " n=" << fixture.n;
    }
  }
}

}  // namespace
}  // namespace mfpoly
