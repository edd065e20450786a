#pragma once

// The alternating binomial sums f_{3j}(a) = sum_l (-1)^l C(-3a, 3l + j),
// j = 0, 1, 2: direct summation, closed forms, the z-general parent
// f_30(a; z), the difference relations between the three sums, the
// period-4 scaling law 3^6 f(a + 4) = f(a), and the integer sequences at
// a = -n/3.
//
// The closed forms are the analytic continuation from Re a < 0. At a = 0 the
// literal sums are (1, 0, 0) while the closed forms give (2/3, 1/3, -1/3);
// both are exposed and neither is silently substituted for the other.

#include "hyp3f2/branch.hpp"
#include "hyp3f2/errors.hpp"
#include "hyp3f2/numeric.hpp"
#include "hyp3f2/pochhammer.hpp"
#include "hyp3f2/rational.hpp"
#include "hyp3f2/report.hpp"
#include "hyp3f2/series.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace hyp3f2 {

enum class BinomSumId { F30 = 0, F31 = 1, F32 = 2 };

inline constexpr std::array<BinomSumId, 3> kAllBinomSums = {BinomSumId::F30, BinomSumId::F31, BinomSumId::F32};

inline int index_of(BinomSumId j) { return static_cast<int>(j); }

inline BinomSumId binom_sum_id(int j) {
  if (j < 0 || j > 2) throw InvalidCaseError("binomial sum index must be 0, 1 or 2, got " + std::to_string(j));
  return static_cast<BinomSumId>(j);
}

inline std::string to_string(BinomSumId j) { return "f3" + std::to_string(index_of(j)); }

/// -3a within this distance of a nonnegative integer selects the finite sum.
inline constexpr double kTerminatingSnap = 1e-9;

/// Common envelope 2 * 3^{-3a/2 - 1} bounding all three closed forms.
template <class T>
T f3j_envelope(T a) {
  return 2.0 * pow3(-1.5 * a - 1.0);
}

/// Closed forms, generic over double and Complex (for complex-step work):
///   f30 = 2 3^{-3a/2-1} cos(pi a / 2)
///   f31 = 2 3^{-3a/2-1} cos((3a + 2) pi / 6)
///   f32 = -2 3^{-3a/2-1} cos((3a - 2) pi / 6)
template <class T>
T f3j_closed(BinomSumId j, T a) {
  const T env = f3j_envelope(a);
  switch (j) {
    case BinomSumId::F30: return env * cospi(a / 2.0);
    case BinomSumId::F31: return env * cospi((3.0 * a + 2.0) / 6.0);
    case BinomSumId::F32: return -env * cospi((3.0 * a - 2.0) / 6.0);
  }
  return T{};
}

inline double f30_closed(double a) { return f3j_closed(BinomSumId::F30, a); }
inline double f31_closed(double a) { return f3j_closed(BinomSumId::F31, a); }
inline double f32_closed(double a) { return f3j_closed(BinomSumId::F32, a); }

/// Analytic a-derivative of the closed form.
inline double f3j_derivative(BinomSumId j, double a) {
  const double env = f3j_envelope(a);
  const double half_pi = kPi / 2.0;
  double phase = 0.0;
  double dphase = 0.0;
  switch (j) {
    case BinomSumId::F30:
      phase = cospi(a / 2.0);
      dphase = -half_pi * sinpi(a / 2.0);
      break;
    case BinomSumId::F31:
      phase = cospi((3.0 * a + 2.0) / 6.0);
      dphase = -half_pi * sinpi((3.0 * a + 2.0) / 6.0);
      break;
    case BinomSumId::F32:
      phase = -cospi((3.0 * a - 2.0) / 6.0);
      dphase = half_pi * sinpi((3.0 * a - 2.0) / 6.0);
      break;
  }
  return env * (-1.5 * kLn3 * phase + dphase);
}

/// f'_{3j}(0); for j = 2 this is (3 ln 3 - sqrt(3) pi) / 6.
inline double initial_slope(BinomSumId j) { return f3j_derivative(j, 0.0); }

/// First derivative by complex step: Im f(x + ih) / h.
template <class F>
double complex_step_derivative(F&& f, double x, double h = 1e-20) {
  return std::imag(f(Complex{x, h})) / h;
}

/// If -3a is (within snap) a nonnegative integer n, returns n.
inline std::optional<unsigned> terminating_order(double a) {
  const double n = -3.0 * a;
  const double r = std::nearbyint(n);
  if (r >= 0.0 && r <= 1e6 && std::abs(n - r) <= kTerminatingSnap) return static_cast<unsigned>(r);
  return std::nullopt;
}

/// Direct summation of f_{3j}(a), binomials via C(n, k) = (-1)^k (-n)_k / k!.
inline SeriesEval f3j_direct(BinomSumId j, double a, double tol, const SeriesOptions& opt = {}) {
  detail::require_tolerance(tol);
  if (!std::isfinite(a)) throw std::invalid_argument("f3j_direct: non-finite a");
  const unsigned jj = static_cast<unsigned>(index_of(j));
  const auto order = terminating_order(a);
  // x = 3a, snapped onto -n in the finite case
  const double x = order ? -static_cast<double>(*order) : 3.0 * a;
  if (!order && a > 0.0)
    return detail::domain_violation("f3j_direct: a > 0 and -3a is not a nonnegative integer");

  double term = ((jj % 2 == 0) ? 1.0 : -1.0) * pochhammer(x, jj) / pochhammer(1.0, jj);
  unsigned k = jj;
  bool first = true;
  auto next = [&]() -> Complex {
    if (!first) {
      const double kd = static_cast<double>(k);
      term *= (x + kd) * (x + kd + 1.0) * (x + kd + 2.0) / ((kd + 1.0) * (kd + 2.0) * (kd + 3.0));
      k += 3;
    }
    first = false;
    return term;
  };
  if (order) {
    const std::uint64_t count = *order >= jj ? (*order - jj) / 3 + 1 : 0;
    return sum_series(next, TailModel{}, tol, opt, count);
  }
  TailModel tail;
  tail.kind = TailKind::UnitPositive;
  tail.margin = -3.0 * a;
  return sum_series(next, tail, tol, opt);
}

/// A complex value with the cube-root branch-cut flag.
struct ZEval {
  Complex value{};
  bool branch_warning = false;
};

/// f_30(a; z) = sum_l C(-3a, 3l) z^l
///            = (1/3){(1 + w)^{-3a} + (1 - e^{i pi/3} w)^{-3a} + (1 + e^{2i pi/3} w)^{-3a}},
/// w the principal cube root of z.
inline ZEval f30_z(double a, Complex z) {
  if (!std::isfinite(a) || !std::isfinite(std::abs(z))) throw std::invalid_argument("f30_z: non-finite input");
  const Complex w = principal_cbrt(z);
  const double p = -3.0 * a;
  const Complex v = power_or_zero(1.0 + w, p) + power_or_zero(1.0 - kRootSixth * w, p) +
                    power_or_zero(1.0 + kRootThird * w, p);
  return {v / 3.0, near_branch_cut(normalize_zero_imag(z))};
}

/// Difference relations among the three sums, on the closed forms. Residuals
/// are measured against the envelope at the most shifted argument.
inline CompoundReport check_relations(double a, double tol = 1e-12) {
  const auto f = [](BinomSumId j, double x) { return f3j_closed(j, x); };
  const double third = 1.0 / 3.0;
  const double a1 = a - third;
  const double a2 = a - 2.0 * third;
  const double scale1 = f3j_envelope(a1);
  const double scale2 = f3j_envelope(a2);
  using B = BinomSumId;
  CompoundReport out;
  const std::string at = " a=" + std::to_string(a);
  out.parts.push_back(compare("sum_rule" + at, f(B::F30, a), f(B::F31, a) - f(B::F32, a), tol, "f30(a)",
                              "f31(a) - f32(a)", f3j_envelope(a)));
  out.parts.push_back(compare("f30_from_f31" + at, f(B::F30, a), f(B::F31, a1) - f(B::F31, a), tol, "f30(a)",
                              "f31(a-1/3) - f31(a)", scale1));
  out.parts.push_back(compare("f31_from_f32" + at, f(B::F31, a), f(B::F32, a1) - f(B::F32, a), tol, "f31(a)",
                              "f32(a-1/3) - f32(a)", scale1));
  out.parts.push_back(compare("f32_from_f31" + at, f(B::F32, a), 2.0 * f(B::F31, a) - f(B::F31, a1), tol,
                              "f32(a)", "2 f31(a) - f31(a-1/3)", scale1));
  out.parts.push_back(compare("f32_second_difference" + at, 3.0 * f(B::F32, a),
                              2.0 * f(B::F32, a1) - f(B::F32, a2) + f(B::F32, a1), tol, "3 f32(a)",
                              "2 f32(a-1/3) - f32(a-2/3) + f32(a-1/3)", 3.0 * scale2));
  out.parts.push_back(compare("f32_from_f30" + at, f(B::F32, a), f(B::F30, a) - f(B::F30, a1), tol, "f32(a)",
                              "f30(a) - f30(a-1/3)", scale1));
  return out;
}

/// 3^6 f_{3j}(a + 4) = f_{3j}(a) on the closed forms, plus a cross-check on
/// the direct sums when both sides are finite sums with a + 4 < 0 (at 0 the
/// literal sum and the closed form differ).
inline IdentityReport check_functional_equation(BinomSumId j, double a, double tol = 1e-12) {
  const double lhs = 729.0 * f3j_closed(j, a + 4.0);
  const double rhs = f3j_closed(j, a);
  auto r = compare(to_string(j) + " scaling a=" + std::to_string(a), lhs, rhs, tol, "729 f(a+4) closed",
                   "f(a) closed", f3j_envelope(a));
  if (terminating_order(a) && terminating_order(a + 4.0) && *terminating_order(a + 4.0) > 0) {
    const SeriesEval far = f3j_direct(j, a, kMinSeriesTolerance);
    const SeriesEval near = f3j_direct(j, a + 4.0, kMinSeriesTolerance);
    const auto cross = compare("direct", 729.0 * near.value, far.value, tol, "729 f(a+4) direct", "f(a) direct",
                               f3j_envelope(a));
    r.note = "finite-sum cross-check rel_err=" + std::to_string(cross.rel_err);
    r.pass = r.pass && cross.pass;
  }
  return r;
}

/// Exact finite sum f_{3j}(-n/3) = sum_l (-1)^l C(n, 3l + j).
inline BigInt f3j_exact(BinomSumId j, unsigned n) {
  BigInt s = 0;
  for (unsigned k = static_cast<unsigned>(index_of(j)), l = 0; k <= n; k += 3, ++l) {
    if (l % 2 == 0) s += binomial(n, k);
    else s -= binomial(n, k);
  }
  return s;
}

/// f_{3j}(-n/3) for n = 0..n_max; j = 0 and j = 1 give A057681 and A057682.
inline std::vector<BigInt> oeis_sequence(int j, unsigned n_max) {
  if (j < 0 || j > 1) throw InvalidCaseError("oeis_sequence: j must be 0 or 1");
  if (n_max > 200) throw std::invalid_argument("oeis_sequence: n_max must be <= 200");
  std::vector<BigInt> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(f3j_exact(binom_sum_id(j), n));
  return out;
}

/// Closed form at a = -n/3 in 100-digit arithmetic, rounded to the nearest
/// integer. With a = -n/3 the envelope is 2 * 3^{(n-2)/2} and each phase is
/// cos(k pi / 6) for an integer k.
inline BigInt f3j_closed_rounded(BinomSumId j, unsigned n) {
  using Big = boost::multiprecision::cpp_bin_float_100;
  const Big pi = boost::math::constants::pi<Big>();
  const Big env = 2 * pow(sqrt(Big(3)), static_cast<int>(n) - 2);
  const long long nn = static_cast<long long>(n);
  Big phase;
  switch (j) {
    case BinomSumId::F30: phase = cos(pi * Big(-nn) / 6); break;
    case BinomSumId::F31: phase = cos(pi * Big(2 - nn) / 6); break;
    case BinomSumId::F32: phase = -cos(pi * Big(-nn - 2) / 6); break;
  }
  const Big v = env * phase;
  return static_cast<BigInt>(round(v));
}

}  // namespace hyp3f2
