#pragma once

// Closed forms for 3F2(a, a+1/3, a+2/3; d, e; z) at z = 1, z = -1 and for
// general z, and the derivative step that raises both lower parameters by 1.
//
// Roots of unity are the explicit constants e^{i pi/3}, e^{2i pi/3}; z^{1/3}
// is the principal cube root and z^{4/3} = z * z^{1/3}.

#include "hyp3f2/binomsum.hpp"
#include "hyp3f2/branch.hpp"
#include "hyp3f2/dual.hpp"
#include "hyp3f2/errors.hpp"
#include "hyp3f2/numeric.hpp"
#include "hyp3f2/series.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyp3f2 {

enum class FamilyId { P1_A, P1_B, P1_C, P4_A, P4_B, P4_C, P3_1, P3_M1, G_23_43, G_53_73 };

inline constexpr std::array<FamilyId, 10> kAllFamilies = {
    FamilyId::P1_A, FamilyId::P1_B, FamilyId::P1_C, FamilyId::P4_A,    FamilyId::P4_B,
    FamilyId::P4_C, FamilyId::P3_1, FamilyId::P3_M1, FamilyId::G_23_43, FamilyId::G_53_73};

inline constexpr std::array<FamilyId, 8> kFixedZFamilies = {FamilyId::P1_A, FamilyId::P1_B, FamilyId::P1_C,
                                                            FamilyId::P4_A, FamilyId::P4_B, FamilyId::P4_C,
                                                            FamilyId::P3_1, FamilyId::P3_M1};

/// Re-a bound for oracle comparison and the prefactor poles of a family.
struct DomainSpec {
  double re_a_upper_bound = std::numeric_limits<double>::infinity();
  std::vector<double> excluded_points;
};

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  std::array<double, 2> lower;
  std::optional<double> z;  // nullopt for the z-general forms
  DomainSpec domain;
};

inline const FamilyInfo& family_info(FamilyId f) {
  constexpr double t = 1.0 / 3.0;
  const double inf = std::numeric_limits<double>::infinity();
  static const std::array<FamilyInfo, 10> table = {{
      {FamilyId::P1_A, "P1_A", {t, 2 * t}, 1.0, {0.0, {}}},
      {FamilyId::P1_B, "P1_B", {2 * t, 4 * t}, 1.0, {t, {t}}},
      {FamilyId::P1_C, "P1_C", {4 * t, 5 * t}, 1.0, {2 * t, {t, 2 * t}}},
      {FamilyId::P4_A, "P4_A", {t, 2 * t}, -1.0, {t, {}}},
      {FamilyId::P4_B, "P4_B", {2 * t, 4 * t}, -1.0, {0.0, {t}}},
      {FamilyId::P4_C, "P4_C", {4 * t, 5 * t}, -1.0, {-t, {t, 2 * t}}},
      {FamilyId::P3_1, "P3_1", {5 * t, 7 * t}, 1.0, {1.0, {t, 2 * t, 1.0, 4 * t}}},
      {FamilyId::P3_M1, "P3_M1", {5 * t, 7 * t}, -1.0, {4 * t, {t, 2 * t, 1.0, 4 * t}}},
      {FamilyId::G_23_43, "G_23_43", {2 * t, 4 * t}, std::nullopt, {inf, {t}}},
      {FamilyId::G_53_73, "G_53_73", {5 * t, 7 * t}, std::nullopt, {inf, {t, 2 * t, 1.0, 4 * t}}},
  }};
  return table[static_cast<std::size_t>(f)];
}

inline std::string_view to_string(FamilyId f) { return family_info(f).name; }

inline std::optional<FamilyId> parse_family(std::string_view name) {
  for (FamilyId f : kAllFamilies)
    if (family_info(f).name == name) return f;
  return std::nullopt;
}

inline bool is_fixed_z(FamilyId f) { return family_info(f).z.has_value(); }

/// Series parameters a family stands for; z defaults to the family's own.
inline HypParams family_params(FamilyId f, double a, std::optional<Complex> z = std::nullopt) {
  const auto& info = family_info(f);
  HypParams p;
  p.upper = {a, a + 1.0 / 3.0, a + 2.0 / 3.0};
  p.lower = {info.lower[0], info.lower[1]};
  if (z) p.z = *z;
  else if (info.z) p.z = *info.z;
  else throw std::invalid_argument(std::string(info.name) + " needs an explicit z");
  return p;
}

/// Radius around an excluded point inside which evaluation is refused.
inline constexpr double kFamilyPoleRadius = 1e-10;

inline void check_family_pole(FamilyId f, double a) {
  for (double x : family_info(f).domain.excluded_points)
    if (std::abs(a - x) <= kFamilyPoleRadius)
      throw PoleError(std::string(to_string(f)) + ": a = " + std::to_string(a) + " is at a pole");
}

namespace detail {

inline double pow2(double x) { return std::exp2(x); }
inline Complex pow2(Complex x) { return std::exp(std::numbers::ln2 * x); }

}  // namespace detail

/// Fixed-z closed forms, generic over double and Complex (for complex step).
/// No pole guard; see eval_family.
template <class T>
T eval_family_t(FamilyId f, T a) {
  using detail::pow2;
  const T a3 = 3.0 * a;
  switch (f) {
    case FamilyId::P1_A: return 2.0 * pow3(-a3 / 2.0 - 1.0) * cospi(a / 2.0);
    case FamilyId::P1_B: return 2.0 / (1.0 - a3) * pow3(-(a3 + 1.0) / 2.0) * cospi((a3 + 1.0) / 6.0);
    case FamilyId::P1_C:
      return 4.0 / ((1.0 - a3) * (2.0 - a3)) * pow3(-a3 / 2.0) * cospi((a3 + 2.0) / 6.0);
    case FamilyId::P4_A: return (2.0 / 3.0) * (pow2(-a3 - 1.0) + cospi(a));
    case FamilyId::P4_B: return 2.0 / (3.0 * (1.0 - a3)) * (pow2(-a3) + cospi((a3 + 1.0) / 3.0));
    case FamilyId::P4_C:
      return 4.0 / (3.0 * (1.0 - a3) * (2.0 - a3)) * (pow2(1.0 - a3) + cospi((a3 + 2.0) / 3.0));
    case FamilyId::P3_1:
      return 8.0 * pow3(-a3 / 2.0 - 4.0) *
             (3.0 * kSqrt3 * (6.0 * a - 5.0) * sinpi(a / 2.0) + 9.0 * cospi(a / 2.0)) /
             ((a - 1.0) * (a - 2.0 / 3.0) * (a - 1.0 / 3.0) * (a3 - 4.0));
    case FamilyId::P3_M1:
      return (pow2(3.0 * (2.0 - a)) * (2.0 - a3) - 8.0 * kSqrt3 * sinpi(a) + 8.0 * (6.0 * a - 7.0) * cospi(a)) /
             (9.0 * (a - 1.0) * (a3 - 4.0) * (a3 - 2.0) * (a3 - 1.0));
    case FamilyId::G_23_43:
    case FamilyId::G_53_73: break;
  }
  throw std::invalid_argument(std::string(to_string(f)) + " is not a fixed-z family");
}

/// One of the eight fixed-z closed forms.
inline double eval_family(FamilyId f, double a) {
  if (!is_fixed_z(f)) throw std::invalid_argument(std::string(to_string(f)) + " is not a fixed-z family");
  if (!std::isfinite(a)) throw std::invalid_argument("eval_family: non-finite a");
  check_family_pole(f, a);
  return eval_family_t(f, a);
}

namespace detail {

// Z is Complex or Dual<Complex> (derivative in z).
template <class Z>
Z g23_43(double a, const Z& z) {
  const double q = 1.0 - 3.0 * a;
  const Complex w3 = kRootThird;
  const Complex w3c = std::conj(kRootThird);
  const Z w = principal_cbrt(z);
  const Z num = power_or_zero(1.0 - w, q) + w3 * power_or_zero(1.0 - w3c * w, q) +
                w3c * power_or_zero(1.0 - w3 * w, q);
  return num / (3.0 * (3.0 * a - 1.0) * w);
}

template <class Z>
Z g53_73(double a, const Z& z) {
  const double p = 3.0 - 3.0 * a;
  const Z w = principal_cbrt(z);
  const Z A = power_or_zero(1.0 - w, p);
  const Z B = power_or_zero(1.0 + kRootSixth * w, p);
  const Z C = power_or_zero(1.0 - kRootThird * w, p);
  const Z num = -A - kRootThird * B + kRootSixth * C + Complex(3.0 * (a - 1.0)) * w * (A + B + C);
  const double den = 81.0 * (a - 1.0) * (a - 2.0 / 3.0) * (a - 1.0 / 3.0) * (3.0 * a - 4.0);
  return 8.0 * num / (Complex(den) * z * w);
}

inline void check_z_general_input(FamilyId f, double a, Complex z) {
  if (!std::isfinite(a) || !std::isfinite(std::abs(z)))
    throw std::invalid_argument(std::string(to_string(f)) + ": non-finite input");
  if (z == Complex{}) throw std::invalid_argument(std::string(to_string(f)) + ": z must be nonzero");
  check_family_pole(f, a);
}

}  // namespace detail

/// 3F2(a, a+1/3, a+2/3; 2/3, 4/3; z).
inline ZEval eval_G_23_43(double a, Complex z) {
  detail::check_z_general_input(FamilyId::G_23_43, a, z);
  z = normalize_zero_imag(z);
  return {detail::g23_43(a, z), near_branch_cut(z)};
}

/// 3F2(a, a+1/3, a+2/3; 5/3, 7/3; z).
inline ZEval eval_G_53_73(double a, Complex z) {
  detail::check_z_general_input(FamilyId::G_53_73, a, z);
  z = normalize_zero_imag(z);
  return {detail::g53_73(a, z), near_branch_cut(z)};
}

inline ZEval eval_z_general(FamilyId f, double a, Complex z) {
  if (f == FamilyId::G_23_43) return eval_G_23_43(a, z);
  if (f == FamilyId::G_53_73) return eval_G_53_73(a, z);
  throw std::invalid_argument(std::string(to_string(f)) + " is not a z-general family");
}

/// 3F2(a+1, a+4/3, a+5/3; d+1, e+1; z) from the z-derivative of a z-general
/// closed form with lower parameters (d, e):
///   d/dz 3F2(a, b, c; d, e; z) = abc/(de) 3F2(a+1, b+1, c+1; d+1, e+1; z).
/// The derivative is taken in forward-mode dual arithmetic.
inline ZEval chain_step(FamilyId base, double a, Complex z) {
  if (base != FamilyId::G_23_43 && base != FamilyId::G_53_73)
    throw std::invalid_argument("chain_step: base must be G_23_43 or G_53_73");
  const double abc = a * (a + 1.0 / 3.0) * (a + 2.0 / 3.0);
  if (std::abs(abc) <= 1e-12) throw PoleError("chain_step: a(a+1/3)(a+2/3) vanishes");
  detail::check_z_general_input(base, a, z);
  z = normalize_zero_imag(z);
  const auto& lower = family_info(base).lower;
  const auto zd = Dual<Complex>::variable(z);
  const Dual<Complex> g = base == FamilyId::G_23_43 ? detail::g23_43(a, zd) : detail::g53_73(a, zd);
  return {lower[0] * lower[1] / abc * g.d, near_branch_cut(z)};
}

}  // namespace hyp3f2
