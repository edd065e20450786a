#pragma once

// Cross-checks: three-term transformations of 3F2(1), the second-order ODEs
// satisfied by 3F2(a, a+1/3, a+2/3; 1/3, 2/3; 1) and 3F2(...; 2/3, 4/3; 1),
// and the digamma series for the a-derivative of the former.

#include "hyp3f2/binomsum.hpp"
#include "hyp3f2/closed_forms.hpp"
#include "hyp3f2/errors.hpp"
#include "hyp3f2/numeric.hpp"
#include "hyp3f2/pochhammer.hpp"
#include "hyp3f2/report.hpp"
#include "hyp3f2/series.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hyp3f2 {

/// Three-term transformations of 3F2(a, b, c; d, e; 1), named after the
/// distinguishing parameter of their second series:
///   DMinusC: the (a, b, d-c; d, 1+a+b-e) form,
///   EMinusB: the (a, c, e-b; 1+a+c-d, e) form,
///   Excess:  the (a, 1+a-d, 1+a+b+c-d-e; 1+a+b-d, 1+a+c-d) form.
enum class Transformation { DMinusC, EMinusB, Excess };

inline constexpr std::array<Transformation, 3> kAllTransformations = {
    Transformation::DMinusC, Transformation::EMinusB, Transformation::Excess};

inline std::string_view to_string(Transformation t) {
  switch (t) {
    case Transformation::DMinusC: return "d-minus-c";
    case Transformation::EMinusB: return "e-minus-b";
    case Transformation::Excess: return "excess";
  }
  return "unknown";
}

inline std::optional<Transformation> parse_transformation(std::string_view s) {
  for (auto t : kAllTransformations)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

/// Gamma arguments closer than this to a pole make a check skip.
inline constexpr double kGammaPoleFilter = 1e-8;
/// Non-terminating constituent series need at least this margin.
inline constexpr double kTransformMarginFilter = 0.05;
inline constexpr double kTransformTolerance = 1e-8;
inline constexpr double kTransformSeriesTolerance = 1e-12;

namespace detail {

struct GammaRatio {
  std::vector<double> num;
  std::vector<double> den;
};

struct TransformTerm {
  GammaRatio prefactor;
  HypParams series;
};

inline std::vector<TransformTerm> transformation_terms(Transformation t, double a, double b, double c, double d,
                                                       double e) {
  auto hp = [](double u1, double u2, double u3, double l1, double l2) {
    return HypParams{{u1, u2, u3}, {l1, l2}, Complex(1.0)};
  };
  const TransformTerm reflected{{{1 + a - d, 1 + b - d, 1 + c - d, d, e}, {a, b, c, 1 + e - d, 2 - d}},
                                hp(1 + a - d, 1 + b - d, 1 + c - d, 1 + e - d, 2 - d)};
  switch (t) {
    case Transformation::DMinusC:
      return {{{{e - a - b, e}, {e - a, e - b}}, hp(a, b, d - c, d, 1 + a + b - e)},
              {{{a + b - e, d, e, d + e - a - b - c}, {a, b, d - c, d + e - a - b}},
               hp(e - a, e - b, d + e - a - b - c, 1 + e - a - b, d + e - a - b)}};
    case Transformation::EMinusB:
      return {reflected, {{{1 + a - d, 1 + c - d}, {1 - d, 1 + a + c - d}}, hp(a, c, e - b, 1 + a + c - d, e)}};
    case Transformation::Excess:
      return {reflected,
              {{{1 + a - d, 1 + b - d, 1 + c - d, e}, {1 - d, 1 + a + b - d, 1 + a + c - d, e - a}},
               hp(a, 1 + a - d, 1 + a + b + c - d - e, 1 + a + b - d, 1 + a + c - d)}};
  }
  return {};
}

inline bool terminates(const HypParams& p) {
  for (double u : p.upper)
    if (near_nonpositive_integer(u, kPoleTolerance)) return true;
  return false;
}

inline std::string describe(const HypParams& p) {
  std::ostringstream os;
  os.precision(6);
  os << "3F2(";
  for (std::size_t i = 0; i < p.upper.size(); ++i) os << (i ? "," : "") << p.upper[i];
  os << ";";
  for (std::size_t i = 0; i < p.lower.size(); ++i) os << (i ? "," : "") << p.lower[i];
  os << ";1)";
  return os.str();
}

/// Evaluates a constituent series, or explains why it cannot be used.
inline std::optional<std::string> usable_series(const HypParams& p, SeriesEval& out) {
  if (!terminates(p)) {
    const double s = convergence_margin(p);
    if (s < kTransformMarginFilter)
      return "divergent constituent " + describe(p) + " (margin " + std::to_string(s) + ")";
  }
  out = eval_series(p, kTransformSeriesTolerance);
  if (!out.ok()) return "constituent " + describe(p) + ": " + std::string(to_string(out.status));
  return std::nullopt;
}

}  // namespace detail

/// Right side of a transformation, or the reason it cannot be formed.
struct TransformedValue {
  std::optional<Complex> value;
  std::string skip_reason;
  std::string note;
};

/// Gamma poles in a prefactor's numerator and divergent constituents make the
/// route unusable. A denominator pole makes the prefactor 0 (reciprocal gamma)
/// and that term's series is then not evaluated, unless the series itself has
/// the matching lower-parameter pole.
inline TransformedValue transformed_value(Transformation which, double a, double b, double c, double d, double e) {
  TransformedValue out;
  const auto terms = detail::transformation_terms(which, a, b, c, d, e);
  for (const auto& term : terms)
    for (double x : term.prefactor.num)
      if (near_nonpositive_integer(x, kGammaPoleFilter)) {
        out.skip_reason = "gamma pole at argument " + std::to_string(x);
        return out;
      }
  Complex rhs{};
  for (const auto& term : terms) {
    double pre = 1.0;
    for (double x : term.prefactor.num) pre *= gamma(x);
    for (double x : term.prefactor.den) pre *= rgamma(x);
    if (!std::isfinite(pre)) {
      out.skip_reason = "prefactor overflow";
      return out;
    }
    if (pre == 0.0) {
      for (double l : term.series.lower)
        if (near_nonpositive_integer(l, kGammaPoleFilter)) {
          out.skip_reason = "zero prefactor against a lower-parameter pole in " + detail::describe(term.series);
          return out;
        }
      out.note += (out.note.empty() ? "" : "; ") + ("term " + detail::describe(term.series) + " has zero prefactor");
      continue;
    }
    SeriesEval s;
    if (auto why = detail::usable_series(term.series, s)) {
      out.skip_reason = *why;
      return out;
    }
    rhs += pre * s.value;
  }
  out.value = rhs;
  return out;
}

/// Compares 3F2(a, b, c; d, e; 1) by direct series with the transformed
/// combination; unusable routes are reported as skips.
inline IdentityReport check_transformation(Transformation which, const HypParams& params) {
  if (params.upper.size() != 3 || params.lower.size() != 2)
    throw std::invalid_argument("check_transformation: need three upper and two lower parameters");
  if (params.z != Complex(1.0)) throw std::invalid_argument("check_transformation: z must be 1");
  const double a = params.upper[0], b = params.upper[1], c = params.upper[2];
  const double d = params.lower[0], e = params.lower[1];
  const std::string name = std::string(to_string(which)) + " " + detail::describe(params);

  const TransformedValue rhs = transformed_value(which, a, b, c, d, e);
  if (!rhs.value) return skipped_report(name, rhs.skip_reason);
  SeriesEval lhs;
  if (auto why = detail::usable_series(params, lhs)) return skipped_report(name, *why);
  auto r = compare(name, lhs.value, *rhs.value, kTransformTolerance, "series", "transformed series");
  r.note = rhs.note;
  return r;
}

/// 3F2(a, a+1/3, a+2/3; 1/3, 2/3; 1) through the d-minus-c transformation,
/// with the lower pair written as (2/3, 1/3) so that every constituent
/// converges for -1 <= a < 0.
inline TransformedValue p1a_via_transformation(double a) {
  return transformed_value(Transformation::DMinusC, a, a + 1.0 / 3.0, a + 2.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0);
}

/// Step for the central second difference.
inline constexpr double kSecondDifferenceStep = 1e-5;

namespace detail {

template <class F>
double ode_residual(F&& f, double a, double c1, double c0) {
  const double h = kSecondDifferenceStep;
  const double u = std::real(f(Complex(a)));
  const double du = complex_step_derivative(f, a);
  const double d2u = (complex_step_derivative(f, a + h) - complex_step_derivative(f, a - h)) / (2.0 * h);
  return std::abs(d2u + c1 * du + c0 * u) / std::max(std::abs(u), 1.0);
}

inline double ode_spring_constant() {
  const double ln27 = 3.0 * kLn3;
  return 0.25 * (kPi * kPi + ln27 * ln27);
}

}  // namespace detail

/// |u'' + 3 ln3 u' + (pi^2 + ln^2 27)/4 u| / max(|u|, 1) for
/// u(a) = 3F2(a, a+1/3, a+2/3; 1/3, 2/3; 1) in closed form.
inline double ode_residual_u(double a) {
  const auto u = [](Complex x) { return eval_family_t(FamilyId::P1_A, x); };
  return detail::ode_residual(u, a, 3.0 * kLn3, detail::ode_spring_constant());
}

/// Same for u2(a) = 3F2(a, a+1/3, a+2/3; 2/3, 4/3; 1), whose coefficients
/// carry the 1/(1 - 3a) pole.
inline double ode_residual_u2(double a) {
  if (std::abs(a - 1.0 / 3.0) <= 1e-6) throw PoleError("ode_residual_u2: a is at the pole 1/3");
  const auto u = [](Complex x) { return eval_family_t(FamilyId::P1_B, x); };
  const double q = 1.0 - 3.0 * a;
  return detail::ode_residual(u, a, 3.0 * (kLn3 - 2.0 / q), detail::ode_spring_constant() - 9.0 * kLn3 / q);
}

/// Constant subtracted from psi(3(j + a)) in the derivative series.
/// ThreeA is psi(3a), the value that makes the identity hold; A is the
/// printed psi(a), kept to demonstrate that it does not.
enum class DigammaOffset { ThreeA, A };

/// u'(a) = 3 sum_j (a)_j (a+1/3)_j (a+2/3)_j / ((1/3)_j (2/3)_j j!) [psi(3(j+a)) - psi(3a)]
///       = -3^{-3a/2-1} [pi sin(pi a/2) + cos(pi a/2) ln 27].
inline IdentityReport corollary_sum(double a, double tol, DigammaOffset offset = DigammaOffset::ThreeA,
                                    const SeriesOptions& opt = {}) {
  if (!(tol >= 1e-12)) throw std::invalid_argument("corollary_sum: tol must be >= 1e-12");
  if (!std::isfinite(a)) throw std::invalid_argument("corollary_sum: non-finite a");
  if (!(a < 0.0)) throw DomainViolationError("corollary_sum: the series needs a < 0");
  if (near_nonpositive_integer(a, 1e-10) || near_nonpositive_integer(3.0 * a, 1e-10))
    throw PoleError("corollary_sum: digamma pole at a = " + std::to_string(a));

  const double shift = offset == DigammaOffset::ThreeA ? digamma(3.0 * a) : digamma(a);
  double coef = 1.0;
  std::uint64_t j = 0;
  auto next = [&]() -> Complex {
    const double jd = static_cast<double>(j);
    const double t = 3.0 * coef * (digamma(3.0 * (jd + a)) - shift);
    coef *= (a + jd) * (a + 1.0 / 3.0 + jd) * (a + 2.0 / 3.0 + jd) / ((1.0 / 3.0 + jd) * (2.0 / 3.0 + jd) * (jd + 1.0));
    ++j;
    return t;
  };
  TailModel tail;
  tail.kind = TailKind::UnitPositive;
  tail.margin = -3.0 * a;
  tail.log_multiplicity = 2;
  const SeriesEval lhs = sum_series(next, tail, tol, opt);
  const double rhs = -pow3(-1.5 * a - 1.0) * (kPi * sinpi(a / 2.0) + cospi(a / 2.0) * 3.0 * kLn3);

  const double lhs_abs = std::abs(lhs.value);
  const double tol_used = std::max(10.0 * lhs.error_estimate / (lhs_abs > 0.0 ? lhs_abs : 1.0), 1e-8);
  auto r = compare("digamma_series a=" + std::to_string(a), lhs.value, rhs, tol_used,
                   offset == DigammaOffset::ThreeA ? "digamma series, offset psi(3a)" : "digamma series, offset psi(a)",
                   "elementary form");
  r.note = std::string("series ") + std::string(to_string(lhs.status)) + ", " + std::to_string(lhs.terms_used) +
           " terms";
  if (!lhs.ok()) r.pass = false;
  return r;
}

}  // namespace hyp3f2
