#pragma once

// Gamma, digamma and Pochhammer symbols, with a floating path and an exact
// rational path for the product identities (duplication, triplication and the
// seven factorial forms of (p/3)_n (q/3)_n).

#include "hyp3f2/errors.hpp"
#include "hyp3f2/numeric.hpp"
#include "hyp3f2/rational.hpp"
#include "hyp3f2/report.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hyp3f2 {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Above this n the floating Pochhammer switches from a direct product to log-gamma.
inline constexpr unsigned kPochhammerDirectLimit = 64;

/// Default cap on n for the exact identity checks.
inline constexpr unsigned kExactIdentityCap = 30;

namespace detail {

inline void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw std::invalid_argument(std::string(who) + ": non-finite argument");
}

inline void require_not_pole(double x, const char* who) {
  if (near_nonpositive_integer(x))
    throw PoleError(std::string(who) + ": argument " + std::to_string(x) + " is at a pole");
}

// Lanczos approximation, g = 7, nine coefficients.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
inline constexpr double kSqrtTwoPi = 2.5066282746310005024;
inline constexpr double kLnSqrtTwoPi = 0.91893853320467274178;

inline double lanczos_sum(double xm) {
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (xm + static_cast<double>(i));
  return sum;
}

// Sign of Gamma(x) away from poles.
inline int gamma_sign(double x) {
  if (x > 0.0) return 1;
  return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
}

}  // namespace detail

/// log |Gamma(x)|.
inline double lgamma_abs(double x) {
  detail::require_finite(x, "lgamma_abs");
  detail::require_not_pole(x, "lgamma_abs");
  if (x < 0.5) return std::log(kPi / std::abs(sinpi(x))) - lgamma_abs(1.0 - x);
  const double xm = x - 1.0;
  const double t = xm + detail::kLanczosG + 0.5;
  return detail::kLnSqrtTwoPi + std::log(detail::lanczos_sum(xm)) + (xm + 0.5) * std::log(t) - t;
}

/// Gamma function; reflection for x < 0.5.
inline double gamma(double x) {
  detail::require_finite(x, "gamma");
  detail::require_not_pole(x, "gamma");
  if (x < 0.5) {
    const double s = sinpi(x);
    if (1.0 - x > 171.0) {
      // Gamma(1 - x) alone overflows; the quotient underflows gracefully.
      return detail::gamma_sign(x) * std::exp(lgamma_abs(x));
    }
    return kPi / (s * gamma(1.0 - x));
  }
  if (x > 171.62) throw OverflowError("gamma: result exceeds double range");
  const double xm = x - 1.0;
  const double t = xm + detail::kLanczosG + 0.5;
  const double half = std::pow(t, 0.5 * (xm + 0.5));
  const double out = detail::kSqrtTwoPi * detail::lanczos_sum(xm) * half * std::exp(-t) * half;
  if (!std::isfinite(out)) throw OverflowError("gamma: result exceeds double range");
  return out;
}

/// 1/Gamma(x), entire: zero at the poles of Gamma.
inline double rgamma(double x) {
  detail::require_finite(x, "rgamma");
  if (near_nonpositive_integer(x)) return 0.0;
  if (x > 171.62) return detail::gamma_sign(x) * std::exp(-lgamma_abs(x));
  return 1.0 / gamma(x);
}

/// Digamma psi = Gamma'/Gamma: upward recurrence to x >= 12, then the
/// asymptotic series through the B_14 term; reflection for x < 0.
inline double digamma(double x) {
  detail::require_finite(x, "digamma");
  detail::require_not_pole(x, "digamma");
  if (x < 0.0) return digamma(1.0 - x) - kPi * cospi(x) / sinpi(x);
  double acc = 0.0;
  while (x < 12.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // B_{2k} / (2k) for k = 1..7
  static constexpr std::array<double, 7> kCoef = {1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
                                                   1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double p = inv2;
  for (double c : kCoef) {
    series += c * p;
    p *= inv2;
  }
  return acc + std::log(x) - 0.5 / x - series;
}

/// Rising factorial (a)_n.
inline double pochhammer(double a, unsigned n) {
  detail::require_finite(a, "pochhammer");
  if (n == 0) return 1.0;
  if (n <= kPochhammerDirectLimit) {
    double out = 1.0;
    for (unsigned k = 0; k < n; ++k) out *= a + static_cast<double>(k);
    if (!std::isfinite(out)) throw OverflowError("pochhammer: result exceeds double range");
    return out;
  }
  if (near_nonpositive_integer(a) && -std::nearbyint(a) < static_cast<double>(n)) return 0.0;
  const double end = a + static_cast<double>(n);
  const double log_mag = lgamma_abs(end) - lgamma_abs(a);
  if (log_mag > std::log(DBL_MAX)) throw OverflowError("pochhammer: result exceeds double range");
  return detail::gamma_sign(end) * detail::gamma_sign(a) * std::exp(log_mag);
}

inline ExactRational pochhammer_exact(const ExactRational& a, unsigned n) {
  ExactRational out(1);
  for (unsigned k = 0; k < n; ++k) out *= a + ExactRational(static_cast<long long>(k));
  return out;
}

/// d/db (b)_j = (b)_j [psi(b + j) - psi(b)].
inline double pochhammer_derivative(double b, unsigned j) {
  detail::require_finite(b, "pochhammer_derivative");
  detail::require_not_pole(b, "pochhammer_derivative");
  if (j == 0) return 0.0;
  detail::require_not_pole(b + j, "pochhammer_derivative");
  return pochhammer(b, j) * (digamma(b + j) - digamma(b));
}

namespace detail {
inline void require_cap(unsigned n, unsigned cap, const char* who) {
  if (n > cap) throw std::invalid_argument(std::string(who) + ": n exceeds cap " + std::to_string(cap));
}
}  // namespace detail

/// (a)_{2n} = 4^n (a/2)_n ((a+1)/2)_n, exactly.
inline IdentityReport check_duplication(const ExactRational& a, unsigned n, unsigned cap = kExactIdentityCap) {
  detail::require_cap(n, cap, "check_duplication");
  const ExactRational half(1, 2);
  const ExactRational lhs = pochhammer_exact(a, 2 * n);
  const ExactRational rhs =
      pow(ExactRational(4), n) * pochhammer_exact(a * half, n) * pochhammer_exact((a + 1) * half, n);
  auto r = compare_exact("duplication a=" + a.str() + " n=" + std::to_string(n), lhs, rhs, "(a)_2n",
                         "4^n (a/2)_n ((a+1)/2)_n");
  return r;
}

/// Both triplication products, exactly:
/// (a)_{3n} = 27^n (a/3)_n ((a+1)/3)_n ((a+2)/3)_n and
/// (3a)_{3n} = 27^n (a)_n (a+1/3)_n (a+2/3)_n.
inline CompoundReport check_triplication(const ExactRational& a, unsigned n, unsigned cap = kExactIdentityCap) {
  detail::require_cap(n, cap, "check_triplication");
  const ExactRational third(1, 3);
  const ExactRational scale = pow(ExactRational(27), n);
  const std::string tag = " a=" + a.str() + " n=" + std::to_string(n);

  CompoundReport out;
  out.parts.push_back(compare_exact(
      "triplication" + tag, pochhammer_exact(a, 3 * n),
      scale * pochhammer_exact(a * third, n) * pochhammer_exact((a + 1) * third, n) *
          pochhammer_exact((a + 2) * third, n),
      "(a)_3n", "27^n (a/3)_n ((a+1)/3)_n ((a+2)/3)_n"));
  out.parts.push_back(compare_exact(
      "triplication_scaled" + tag, pochhammer_exact(a * 3, 3 * n),
      scale * pochhammer_exact(a, n) * pochhammer_exact(a + third, n) * pochhammer_exact(a + third * 2, n),
      "(3a)_3n", "27^n (a)_n (a+1/3)_n (a+2/3)_n"));
  return out;
}

/// One of the seven factorial forms (p/3)_n (q/3)_n = c (3n+k)! / ((n+m)! 27^n).
struct CaseIdentity {
  long long p;       // first Pochhammer base, in thirds
  long long q;       // second Pochhammer base, in thirds
  long long c_num;   // constant c = c_num / c_den
  long long c_den;
  unsigned k;        // numerator factorial offset
  unsigned m;        // denominator factorial offset
};

inline constexpr std::array<CaseIdentity, 7> kCaseIdentities = {{
    {1, 2, 1, 1, 0, 0},
    {2, 4, 1, 1, 1, 0},
    {4, 5, 1, 2, 2, 0},
    {4, 5, 1, 6, 3, 1},
    {5, 7, 1, 24, 4, 1},
    {7, 8, 1, 120, 5, 1},
    {7, 8, 2, 720, 6, 2},
}};

inline IdentityReport check_case_identity(int case_index, unsigned n, unsigned cap = kExactIdentityCap) {
  if (case_index < 1 || case_index > static_cast<int>(kCaseIdentities.size()))
    throw InvalidCaseError("check_case_identity: case index must be in 1..7, got " + std::to_string(case_index));
  detail::require_cap(n, cap, "check_case_identity");
  const CaseIdentity& c = kCaseIdentities[static_cast<std::size_t>(case_index - 1)];
  const ExactRational lhs = pochhammer_exact(ExactRational(c.p, 3), n) * pochhammer_exact(ExactRational(c.q, 3), n);
  const ExactRational rhs = ExactRational(c.c_num, c.c_den) * ExactRational(factorial(3 * n + c.k)) /
                            (ExactRational(factorial(n + c.m)) * pow(ExactRational(27), n));
  const std::string label = "(" + std::to_string(c.p) + "/3)_n (" + std::to_string(c.q) + "/3)_n";
  const std::string rlabel = std::to_string(c.c_num) + "/" + std::to_string(c.c_den) + " (3n+" +
                             std::to_string(c.k) + ")! / ((n+" + std::to_string(c.m) + ")! 27^n)";
  return compare_exact("case" + std::to_string(case_index) + " n=" + std::to_string(n), lhs, rhs, label, rlabel);
}

/// C(n, k) = (-1)^k (-n)_k / k!, exactly.
inline IdentityReport check_binomial_relation(unsigned n, unsigned k) {
  const ExactRational sign((k % 2 == 0) ? 1 : -1);
  const ExactRational rhs =
      sign * pochhammer_exact(ExactRational(-static_cast<long long>(n)), k) / ExactRational(factorial(k));
  return compare_exact("binomial n=" + std::to_string(n) + " k=" + std::to_string(k),
                       ExactRational(binomial(n, k)), rhs, "C(n,k)", "(-1)^k (-n)_k / k!");
}

}  // namespace hyp3f2
