#pragma once

// Principal cube roots and complex powers used by the root-of-unity closed
// forms, for plain complex values and for Dual<Complex> (derivative in z).

#include "hyp3f2/dual.hpp"
#include "hyp3f2/numeric.hpp"

#include <cmath>
#include <complex>

namespace hyp3f2 {

/// Bases smaller than this are treated as exact zeros of a root factor.
inline constexpr double kZeroBaseTolerance = 1e-12;

/// Principal cube root, arg in (-pi/3, pi/3].
inline Complex principal_cbrt(Complex z) {
  z = normalize_zero_imag(z);
  if (z == Complex{}) return {};
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

inline Dual<Complex> principal_cbrt(const Dual<Complex>& z) {
  const Complex w = principal_cbrt(z.v);
  return {w, w / (3.0 * z.v) * z.d};
}

/// Principal base^p. A base that is an exact zero of its root factor
/// contributes 0, which is the value continued from the side where the term
/// vanishes (Re p > 0).
inline Complex power_or_zero(Complex base, double p) {
  if (std::abs(base) <= kZeroBaseTolerance) return {};
  return std::pow(base, p);
}

inline Dual<Complex> power_or_zero(const Dual<Complex>& base, double p) {
  if (std::abs(base.v) <= kZeroBaseTolerance) {
    if (p > 1.0) return {};
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {Complex{}, Complex{nan, nan}};
  }
  const Complex v = std::pow(base.v, p);
  return {v, p * v / base.v * base.d};
}

}  // namespace hyp3f2
