#include "hyp3f2/binomsum.hpp"

#include "hyp3f2/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hyp3f2;

namespace {

constexpr BinomSumId F30 = BinomSumId::F30;
constexpr BinomSumId F31 = BinomSumId::F31;
constexpr BinomSumId F32 = BinomSumId::F32;

double direct(BinomSumId j, double a) { return f3j_direct(j, a, 1e-13).value.real(); }

}  // namespace

TEST(F3jDirect, FiniteSums) {
  EXPECT_EQ(direct(F30, 0.0), 1.0);
  EXPECT_EQ(direct(F30, -1.0), 0.0);
  EXPECT_EQ(direct(F30, -2.0), -18.0);
  EXPECT_EQ(f3j_direct(F30, -2.0, 1e-12).status, SeriesStatus::Terminated);
  // snapping: -3a = 6 up to rounding
  EXPECT_EQ(direct(F30, -2.0 + 1e-11), -18.0);
}

TEST(F3jDirect, LiteralValuesAtZero) {
  EXPECT_EQ(direct(F30, 0.0), 1.0);
  EXPECT_EQ(direct(F31, 0.0), 0.0);
  EXPECT_EQ(direct(F32, 0.0), 0.0);
}

TEST(F3jDirect, PositiveNonTerminatingIsDomainViolation) {
  EXPECT_EQ(f3j_direct(F30, 0.2, 1e-10).status, SeriesStatus::DomainViolation);
  EXPECT_EQ(f3j_direct(F31, 1.0 / 3.0 + 0.01, 1e-10).status, SeriesStatus::DomainViolation);
  EXPECT_THROW(f3j_direct(F30, -1.0, 1e-16), std::invalid_argument);
}

TEST(F3jClosed, Examples) {
  EXPECT_NEAR(f30_closed(-1.0), 0.0, 1e-15);
  EXPECT_NEAR(f30_closed(-2.0), -18.0, 1e-13);
  EXPECT_NEAR(f30_closed(-1.0 / 3.0), 1.0, 1e-15);
  EXPECT_NEAR(f31_closed(-1.0 / 3.0), 1.0, 1e-15);
  EXPECT_NEAR(f31_closed(-1.0), 3.0, 1e-14);
  EXPECT_NEAR(f31_closed(0.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(f32_closed(-2.0 / 3.0), 1.0, 1e-15);
  EXPECT_NEAR(f32_closed(-1.0), 3.0, 1e-14);
  EXPECT_NEAR(f32_closed(-4.0 / 3.0), 6.0, 1e-14);
}

TEST(F3jClosed, ContinuationValuesAtZero) {
  EXPECT_NEAR(f30_closed(0.0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(f31_closed(0.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(f32_closed(0.0), -1.0 / 3.0, 1e-15);
}

TEST(F3jClosed, DirectSumAgreementProperty) {
  Sampler rng(11);
  for (int i = 0; i < 300; ++i) {
    const double a = rng.uniform(-4.0, -0.05);
    for (BinomSumId j : kAllBinomSums) {
      const auto s = f3j_direct(j, a, 1e-12);
      ASSERT_TRUE(s.ok()) << "a=" << a;
      const double c = f3j_closed(j, a);
      EXPECT_LE(std::abs(s.value.real() - c), std::max(10 * s.error_estimate, 1e-10 * std::abs(c)))
          << to_string(j) << " a=" << a;
    }
  }
}

TEST(F3jClosed, EnvelopeBound) {
  for (double a = -8.0; a <= 8.0; a += 0.0137)
    for (BinomSumId j : kAllBinomSums)
      EXPECT_LE(std::abs(f3j_closed(j, a)), f3j_envelope(a) * (1 + 1e-15)) << a;
}

TEST(F30z, Examples) {
  const auto at_one = f30_z(-1.0, Complex(1.0));
  EXPECT_NEAR(at_one.value.real(), 2.0, 1e-14);
  EXPECT_NEAR(at_one.value.imag(), 0.0, 1e-14);
  for (Complex z : {Complex(0.3), Complex(-0.4, 0.2), Complex(0.9, -0.9)})
    EXPECT_NEAR(std::abs(f30_z(0.0, z).value - 1.0), 0.0, 1e-15);
}

TEST(F30z, MinusOneMatchesClosedForm) {
  for (double a = -5.0; a <= 2.0; a += 0.05) {
    const auto v = f30_z(a, Complex(-1.0));
    EXPECT_TRUE(v.branch_warning);
    EXPECT_NEAR(v.value.real(), f30_closed(a), 1e-12 * f3j_envelope(a)) << a;
  }
}

TEST(F30z, RealOnPositiveAxis) {
  for (double a = -3.0; a <= 1.0; a += 0.1)
    for (double z : {0.05, 0.5, 1.0, 3.0}) {
      const auto v = f30_z(a, Complex(z));
      EXPECT_FALSE(v.branch_warning);
      EXPECT_LE(std::abs(v.value.imag()), 1e-12 * std::abs(v.value)) << a << " " << z;
    }
}

TEST(F30z, FiniteSumAtOne) {
  // f30(a; 1) = sum_l C(-3a, 3l) at a = -n/3
  for (unsigned n = 0; n <= 20; ++n) {
    double s = 0.0;
    for (unsigned k = 0; k <= n; k += 3) s += binomial(n, k).convert_to<double>();
    EXPECT_NEAR(f30_z(-static_cast<double>(n) / 3.0, Complex(1.0)).value.real(), s, 1e-12 * s) << n;
  }
}

TEST(Relations, Examples) {
  EXPECT_TRUE(check_relations(-1.0).pass());
  EXPECT_TRUE(check_relations(0.0).pass());
  EXPECT_TRUE(check_relations(-2.37).pass());
  EXPECT_EQ(check_relations(-1.0).parts.size(), 6u);
}

TEST(Relations, DenseGrid) {
  for (int i = 0; i < 1000; ++i) {
    const double a = -10.0 + 20.0 * i / 999.0;
    const auto r = check_relations(a);
    EXPECT_TRUE(r.pass()) << "a=" << a << " max rel " << r.max_rel_err();
  }
}

TEST(FunctionalEquation, Examples) {
  const auto r = check_functional_equation(F30, -6.0);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.rhs.real(), -13122.0, 1e-9);
  EXPECT_FALSE(r.note.empty());  // finite-sum cross-check ran
  EXPECT_TRUE(check_functional_equation(F30, 0.0).pass);
  EXPECT_NEAR(check_functional_equation(F30, 0.0).rhs.real(), 2.0 / 3.0, 1e-15);
  EXPECT_TRUE(check_functional_equation(F31, -1.0).pass);
  EXPECT_NEAR(check_functional_equation(F31, -1.0).lhs.real(), 3.0, 1e-12);
}

TEST(FunctionalEquation, DenseGrid) {
  for (int i = 0; i < 1000; ++i) {
    const double a = -10.0 + 20.0 * i / 999.0;
    for (BinomSumId j : kAllBinomSums) EXPECT_TRUE(check_functional_equation(j, a).pass) << a;
  }
}

TEST(InitialSlope, Values) {
  EXPECT_NEAR(initial_slope(F32), (3 * std::log(3.0) - std::sqrt(3.0) * M_PI) / 6, 1e-15);
  EXPECT_NEAR(initial_slope(F32), -0.357593537783054, 1e-14);
  EXPECT_NEAR(initial_slope(F30), -std::log(3.0), 1e-15);
}

TEST(InitialSlope, MatchesComplexStep) {
  for (BinomSumId j : kAllBinomSums)
    for (double a : {0.0, -0.7, 1.3, -4.2}) {
      const auto f = [j](Complex x) { return f3j_closed(j, x); };
      const double cs = complex_step_derivative(f, a);
      EXPECT_NEAR(f3j_derivative(j, a), cs, 1e-12 * std::max(1.0, std::abs(cs))) << to_string(j) << " " << a;
    }
}

TEST(Oeis, Prefixes) {
  const auto s0 = oeis_sequence(0, 6);
  ASSERT_EQ(s0.size(), 7u);
  EXPECT_EQ(s0[0], 1);
  EXPECT_EQ(s0[1], 1);
  EXPECT_EQ(s0[2], 1);
  EXPECT_EQ(s0[3], 0);
  EXPECT_EQ(s0[6], -18);
  const auto s1 = oeis_sequence(1, 3);
  EXPECT_EQ(s1[1], 1);
  EXPECT_EQ(s1[2], 2);
  EXPECT_EQ(s1[3], 3);
  EXPECT_THROW(oeis_sequence(2, 3), InvalidCaseError);
  EXPECT_THROW(oeis_sequence(0, 201), std::invalid_argument);
}

TEST(Oeis, RoundedClosedFormAgreesToTwoHundred) {
  for (int j = 0; j <= 1; ++j) {
    const auto seq = oeis_sequence(j, 200);
    for (unsigned n = 0; n <= 200; ++n) EXPECT_EQ(seq[n], f3j_closed_rounded(binom_sum_id(j), n)) << j << " " << n;
  }
}

TEST(Terminating, ExactAgainstRoundedClosedForm) {
  for (BinomSumId j : kAllBinomSums)
    for (unsigned n = 0; n <= 60; ++n) EXPECT_EQ(f3j_exact(j, n), f3j_closed_rounded(j, n)) << to_string(j) << n;
}

TEST(Terminating, ExactValuesAtZeroAreTheLiteralSums) {
  // the closed forms give 2/3, 1/3, -1/3 here; the literal sums are their roundings
  EXPECT_EQ(f3j_exact(F30, 0), 1);
  EXPECT_EQ(f3j_exact(F31, 0), 0);
  EXPECT_EQ(f3j_exact(F32, 0), 0);
}
