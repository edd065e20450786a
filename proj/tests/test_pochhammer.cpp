#include "hyp3f2/pochhammer.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace hyp3f2;

namespace {

// Independent reference: Gamma(x) from the standard library.
double std_gamma(double x) { return std::tgamma(x); }

}  // namespace

TEST(Gamma, ClassicalValues) {
  EXPECT_DOUBLE_EQ(hyp3f2::gamma(1.0), 1.0);
  EXPECT_NEAR(hyp3f2::gamma(0.5), std::sqrt(std::numbers::pi), 1e-15);
  const double g45 = 3.5 * 2.5 * 1.5 * 0.5 * std::sqrt(std::numbers::pi);
  EXPECT_NEAR(hyp3f2::gamma(4.5) / g45, 1.0, 1e-13);
}

TEST(Gamma, MatchesStdlibOverRange) {
  for (double x = -9.75; x <= 170.0; x += 0.37) {
    if (near_nonpositive_integer(x, 1e-6)) continue;
    // exp(x log x) amplifies rounding near the overflow edge
    const double tol = x < 100.0 ? 1e-13 : 3e-13;
    EXPECT_NEAR(hyp3f2::gamma(x) / std_gamma(x), 1.0, tol) << "x=" << x;
  }
}

TEST(Gamma, PolesAndOverflow) {
  EXPECT_THROW(hyp3f2::gamma(0.0), PoleError);
  EXPECT_THROW(hyp3f2::gamma(-3.0), PoleError);
  EXPECT_THROW(hyp3f2::gamma(-2.0 + 1e-13), PoleError);
  EXPECT_THROW(hyp3f2::gamma(180.0), OverflowError);
  EXPECT_EQ(rgamma(-4.0), 0.0);
  EXPECT_NEAR(rgamma(0.5) * hyp3f2::gamma(0.5), 1.0, 1e-15);
}

TEST(Digamma, KnownValues) {
  EXPECT_NEAR(digamma(1.0), -kEulerGamma, 1e-15);
  EXPECT_NEAR(digamma(2.0), 1.0 - kEulerGamma, 1e-15);
  EXPECT_NEAR(digamma(0.5), -kEulerGamma - 2.0 * std::numbers::ln2, 1e-14);
  EXPECT_THROW(digamma(-1.0), PoleError);
}

TEST(Digamma, MatchesDerivativeOfLogGamma) {
  // fourth-order central difference of std::lgamma
  for (double x : {-2.7, -0.4, 0.3, 1.7, 6.2, 25.0}) {
    const double h = 1e-4;
    const auto L = [](double t) { return std::lgamma(t); };
    const double fd = (L(x - 2 * h) - 8 * L(x - h) + 8 * L(x + h) - L(x + 2 * h)) / (12 * h);
    EXPECT_NEAR(digamma(x), fd, 1e-8 * std::max(1.0, std::abs(fd))) << "x=" << x;
  }
}

TEST(Digamma, Recurrence) {
  for (double x = -4.9; x < 12.0; x += 0.61)
    EXPECT_NEAR(digamma(x + 1.0), digamma(x) + 1.0 / x, 1e-11 * std::max(1.0, std::abs(digamma(x)))) << x;
}

TEST(Pochhammer, Examples) {
  EXPECT_DOUBLE_EQ(pochhammer(0.5, 3), 1.875);
  EXPECT_EQ(pochhammer(-7.3, 0), 1.0);
  EXPECT_EQ(pochhammer(-1.0, 2), 0.0);
}

TEST(Pochhammer, StepRelationProperty) {
  for (double a = -5.0; a <= 5.0; a += 0.173)
    for (unsigned n = 0; n < 50; ++n) {
      const double lhs = pochhammer(a, n + 1);
      const double rhs = pochhammer(a, n) * (a + n);
      EXPECT_NEAR(lhs, rhs, 1e-13 * std::abs(rhs)) << "a=" << a << " n=" << n;
    }
}

TEST(Pochhammer, LogGammaPathAgreesWithProduct) {
  // n > 64 switches to log-gamma; compare with an explicit product in long double
  for (double a : {0.3, 1.7, -70.5, 2.25}) {
    long double p = 1.0L;
    for (unsigned k = 0; k < 80; ++k) p *= static_cast<long double>(a) + k;
    EXPECT_NEAR(pochhammer(a, 80) / static_cast<double>(p), 1.0, 1e-12) << "a=" << a;
  }
  EXPECT_EQ(pochhammer(-70.0, 80), 0.0);
  EXPECT_THROW(pochhammer(10.0, 200), OverflowError);
}

TEST(PochhammerExact, Examples) {
  EXPECT_EQ(pochhammer_exact(ExactRational(1, 3), 2), ExactRational(4, 9));
  EXPECT_EQ(pochhammer_exact(ExactRational(2, 3), 2), ExactRational(10, 9));
  EXPECT_EQ(pochhammer_exact(ExactRational(1), 6), ExactRational(720));
}

TEST(PochhammerExact, StepRelationProperty) {
  for (long long p = -15; p <= 15; ++p)
    for (unsigned n = 0; n < 50; n += 7) {
      const ExactRational a(p, 3);
      EXPECT_EQ(pochhammer_exact(a, n + 1), pochhammer_exact(a, n) * (a + ExactRational(n)));
    }
}

TEST(ExactRational, LowestTermsAndRoundTrip) {
  const ExactRational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(ExactRational::parse(r.str()), r);
  EXPECT_EQ(ExactRational::parse("5").str(), "5/1");
  EXPECT_THROW(ExactRational(1, 0), std::invalid_argument);
  const ExactRational big = pow(ExactRational(7, 3), 90);
  EXPECT_EQ(ExactRational::parse(big.str()), big);
}

TEST(Triplication, Examples) {
  const auto r = check_triplication(ExactRational(1, 3), 2);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.parts.at(0).lhs_exact.value(), "58240/729");
  EXPECT_EQ(r.parts.at(1).lhs_exact.value(), "720/1");
  EXPECT_TRUE(check_triplication(ExactRational(-17, 5), 0).pass());
  EXPECT_TRUE(check_triplication(ExactRational(1), 1).pass());
}

TEST(Triplication, ThirdsGrid) {
  for (long long k = -9; k <= 9; ++k)
    for (unsigned n = 0; n <= 20; ++n) EXPECT_TRUE(check_triplication(ExactRational(k, 3), n).pass()) << k << " " << n;
}

TEST(Duplication, RationalsWithSmallDenominators) {
  for (long long q = 1; q <= 6; ++q)
    for (long long p = -12; p <= 12; p += 5)
      for (unsigned n = 0; n <= 20; n += 4) EXPECT_TRUE(check_duplication(ExactRational(p, q), n).pass);
}

TEST(Triplication, CapIsEnforced) {
  EXPECT_THROW(check_triplication(ExactRational(1, 3), 31), std::invalid_argument);
  EXPECT_NO_THROW(check_triplication(ExactRational(1, 3), 40, 40));
}

TEST(CaseIdentity, Examples) {
  const auto c1 = check_case_identity(1, 2);
  EXPECT_TRUE(c1.pass);
  EXPECT_EQ(c1.lhs_exact.value(), "40/81");
  const auto c3 = check_case_identity(3, 1);
  EXPECT_TRUE(c3.pass);
  EXPECT_EQ(c3.rhs_exact.value(), "20/9");
  for (int k = 1; k <= 7; ++k) EXPECT_TRUE(check_case_identity(k, 0).pass) << k;
}

TEST(CaseIdentity, AllCasesUpToThirty) {
  for (int k = 1; k <= 7; ++k)
    for (unsigned n = 0; n <= 30; ++n) EXPECT_TRUE(check_case_identity(k, n).pass) << k << " " << n;
}

TEST(CaseIdentity, InvalidIndex) {
  EXPECT_THROW(check_case_identity(0, 1), InvalidCaseError);
  EXPECT_THROW(check_case_identity(8, 1), InvalidCaseError);
}

TEST(BinomialRelation, UpToForty) {
  for (unsigned n = 0; n <= 40; ++n)
    for (unsigned k = 0; k <= n; ++k) EXPECT_TRUE(check_binomial_relation(n, k).pass) << n << " " << k;
}

TEST(PochhammerDerivative, Examples) {
  EXPECT_EQ(pochhammer_derivative(2.3, 0), 0.0);
  EXPECT_NEAR(pochhammer_derivative(1.0, 1), 1.0, 1e-14);
  EXPECT_NEAR(pochhammer_derivative(1.0 / 3.0, 2), 5.0 / 3.0, 1e-13);
}

TEST(PochhammerDerivative, MatchesFiniteDifference) {
  const double h = 1e-6;
  for (double b : {0.1, 1.0 / 3.0, 0.7, 2.4})
    for (unsigned j = 1; j <= 10; ++j) {
      const double fd = (pochhammer(b + h, j) - pochhammer(b - h, j)) / (2 * h);
      const double d = pochhammer_derivative(b, j);
      EXPECT_NEAR(d, fd, 1e-6 * std::abs(d)) << "b=" << b << " j=" << j;
    }
}
