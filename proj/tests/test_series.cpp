#include "hyp3f2/series.hpp"

#include "hyp3f2/rational.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hyp3f2;

namespace {

constexpr double kThird = 1.0 / 3.0;

// Exact terminating sum of 3F2 at rational parameters and z = +-1.
ExactRational exact_terminating(int m, const ExactRational& b, const ExactRational& c, const ExactRational& d,
                                const ExactRational& e, int z) {
  ExactRational term(1), sum(1);
  for (int j = 0; j < m; ++j) {
    const ExactRational J(j);
    term = term * (ExactRational(-m) + J) * (b + J) * (c + J) /
           ((d + J) * (e + J) * (J + ExactRational(1))) * ExactRational(z);
    sum = sum + term;
  }
  return sum;
}

}  // namespace

TEST(EvalSeries, ZeroUpperParameterTerminates) {
  const auto s = eval_series({{0.0, kThird, 2 * kThird}, {kThird, 2 * kThird}, 1.0}, 1e-12);
  EXPECT_EQ(s.status, SeriesStatus::Terminated);
  EXPECT_EQ(s.terms_used, 1u);
  EXPECT_EQ(s.value.real(), 1.0);
}

TEST(EvalSeries, TwoTermSums) {
  const HypParams p{{-1.0, -2 * kThird, -kThird}, {kThird, 2 * kThird}, 1.0};
  EXPECT_NEAR(eval_series(p, 1e-12).value.real(), 0.0, 1e-15);
  HypParams q = p;
  q.z = -1.0;
  EXPECT_NEAR(eval_series(q, 1e-12).value.real(), 2.0, 1e-15);
}

TEST(EvalSeries, TerminatingMatchesExactRationalSum) {
  const ExactRational b(1, 3), c(-5, 7), d(3, 2), e(11, 6);
  for (int m = 0; m <= 20; ++m)
    for (int z : {1, -1}) {
      const auto s = eval_series({{-static_cast<double>(m), b.to_double(), c.to_double()},
                                  {d.to_double(), e.to_double()}, static_cast<double>(z)},
                                 1e-14);
      EXPECT_EQ(s.status, SeriesStatus::Terminated);
      EXPECT_EQ(s.terms_used, static_cast<std::uint64_t>(m + 1));
      const double exact = exact_terminating(m, b, c, d, e, z).to_double();
      EXPECT_NEAR(s.value.real(), exact, 1e-13 * std::max(1.0, std::abs(exact))) << "m=" << m << " z=" << z;
    }
}

TEST(EvalSeries, GaussSumOracle) {
  // 3F2(a, b, c; c, e; 1) = 2F1(a, b; e; 1) = G(e)G(e-a-b)/(G(e-a)G(e-b))
  const double a = -0.4, b = 0.7, c = 1.3, e = 1.9;
  const double exact =
      std::tgamma(e) * std::tgamma(e - a - b) / (std::tgamma(e - a) * std::tgamma(e - b));
  const auto s = eval_series({{a, b, c}, {c, e}, 1.0}, 1e-12);
  ASSERT_TRUE(s.ok());
  EXPECT_NEAR(s.value.real(), exact, 1e-11 * std::abs(exact));
}

TEST(EvalSeries, GeometricOracleInsideDisk) {
  // 3F2(1, b, c; b, c; z) = 1/(1 - z)
  for (Complex z : {Complex(0.5), Complex(-0.8), Complex(0.3, 0.6), Complex(-0.2, -0.85)}) {
    const auto s = eval_series({{1.0, 0.3, 2.1}, {0.3, 2.1}, z}, 1e-13);
    ASSERT_TRUE(s.ok());
    EXPECT_LT(std::abs(s.value - 1.0 / (1.0 - z)), 1e-12 * std::abs(1.0 / (1.0 - z))) << z;
    EXPECT_LE(s.error_estimate, 1e-13 * std::abs(s.value));
  }
}

TEST(EvalSeries, DomainViolations) {
  EXPECT_EQ(eval_series({{0.5, 0.5, 0.5}, {0.5, 0.9}, 1.0}, 1e-10).status, SeriesStatus::DomainViolation);
  EXPECT_EQ(eval_series({{1.5, 1.5, 0.5}, {0.5, 0.4}, -1.0}, 1e-10).status, SeriesStatus::DomainViolation);
  EXPECT_EQ(eval_series({{0.5, 0.5, 0.5}, {0.7, 0.9}, Complex(1.01)}, 1e-10).status,
            SeriesStatus::DomainViolation);
  EXPECT_EQ(eval_series({{0.5, 0.5, 0.5}, {-2.0, 0.9}, 0.5}, 1e-10).status, SeriesStatus::DomainViolation);
  // a lower pole beyond a terminating upper parameter is harmless
  EXPECT_EQ(eval_series({{-1.0, 0.5, 0.5}, {-2.0, 0.9}, 0.5}, 1e-10).status, SeriesStatus::Terminated);
  EXPECT_THROW(eval_series({{0.5}, {0.7}, 0.5}, 1e-15), std::invalid_argument);
}

TEST(EvalSeries, ConditionalConvergenceIsFlagged) {
  // s = -0.5 at z = -1
  const auto s = eval_series({{0.5, 0.5, 0.5}, {0.5, 0.5}, -1.0}, 1e-10);
  EXPECT_TRUE(s.conditional);
  EXPECT_FALSE(s.warning.empty());
  ASSERT_TRUE(s.ok());
  // 2F1(1/2, 1/2; 1/2; -1) = (1 + 1)^{-1/2}
  EXPECT_NEAR(s.value.real(), 1.0 / std::sqrt(2.0), 1e-9);
}

TEST(EvalSeries, ConvergedHonoursTolerance) {
  for (double a : {-0.1, -0.5, -1.7, -2.9}) {
    const auto s = eval_series({{a, a + kThird, a + 2 * kThird}, {kThird, 2 * kThird}, 1.0}, 1e-11);
    ASSERT_EQ(s.status, SeriesStatus::Converged) << a;
    EXPECT_LE(s.error_estimate, 1e-11 * std::abs(s.value));
  }
}

TEST(EvalSeries, MonotoneTolerance) {
  for (const HypParams& p : {HypParams{{-0.3, 0.2, 0.45}, {1.1, 0.8}, 1.0},
                             HypParams{{0.6, 0.2, -0.45}, {1.1, 0.8}, -1.0},
                             HypParams{{1.6, 2.2, -0.45}, {1.1, 0.8}, Complex(0.4, 0.5)}}) {
    const auto loose = eval_series(p, 1e-6);
    const auto tight = eval_series(p, 1e-13);
    ASSERT_TRUE(loose.ok() && tight.ok());
    EXPECT_LE(std::abs(loose.value - tight.value), loose.error_estimate);
  }
}

TEST(EvalSeries, PermutationSymmetryIsBitIdentical) {
  const HypParams p{{-0.31, 0.27, 0.64}, {1.37, 0.92}, Complex(0.7, -0.2)};
  const auto ref = eval_series(p, 1e-13).value;
  HypParams q{{0.64, -0.31, 0.27}, {0.92, 1.37}, p.z};
  EXPECT_EQ(eval_series(q, 1e-13).value, ref);
  q.upper = {0.27, 0.64, -0.31};
  EXPECT_EQ(eval_series(q, 1e-13).value, ref);
}

TEST(EvalSeries, SelfConsistencyUnderSmallZPerturbation) {
  const HypParams p{{-0.31, 0.27, 0.64}, {1.37, 0.92}, 0.8};
  HypParams q = p;
  q.z = p.z * (1.0 + 1e-9);
  const double dfdz = std::abs(eval_series_dz(p, 1e-13).value);
  EXPECT_LE(std::abs(eval_series(p, 1e-13).value - eval_series(q, 1e-13).value), 1e-8 * std::max(dfdz, 1.0));
}

TEST(EvalSeriesDz, ZeroUpperGivesZero) {
  const auto d = eval_series_dz({{0.0, 0.5, 0.7}, {1.2, 1.5}, 0.4}, 1e-12);
  EXPECT_EQ(d.value, Complex(0.0));
}

TEST(EvalSeriesDz, MatchesCentralDifference) {
  const HypParams p{{-1.0, -2 * kThird, -kThird}, {2 * kThird, 4 * kThird}, 0.5};
  const double h = 1e-5;
  HypParams lo = p, hi = p;
  lo.z = 0.5 - h;
  hi.z = 0.5 + h;
  const double fd = (eval_series(hi, 1e-14).value.real() - eval_series(lo, 1e-14).value.real()) / (2 * h);
  EXPECT_NEAR(eval_series_dz(p, 1e-14).value.real(), fd, 1e-7);
}

TEST(SumSeries, RichardsonOnlyOnUnitCircle) {
  // sum 1/k^2 via the UnitPositive model (margin 1): pi^2/6
  double k = 0.0;
  auto next = [&]() -> Complex {
    k += 1.0;
    return 1.0 / (k * k);
  };
  TailModel tail;
  tail.kind = TailKind::UnitPositive;
  tail.margin = 1.0;
  const auto s = sum_series(next, tail, 1e-12);
  ASSERT_TRUE(s.ok());
  EXPECT_TRUE(s.extrapolated);
  EXPECT_NEAR(s.value.real(), std::numbers::pi * std::numbers::pi / 6.0, 1e-11);
}
