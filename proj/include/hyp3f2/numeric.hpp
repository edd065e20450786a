#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace hyp3f2 {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLn3 = 1.0986122886681098;
inline constexpr double kSqrt3 = 1.7320508075688772;

/// Uniform pole guard for gamma, digamma and Pochhammer arguments.
inline constexpr double kPoleTolerance = 1e-12;

/// e^{i pi/3} and e^{2 i pi/3}: the roots fixed by 1 - (-1)^{1/3} + (-1)^{2/3} = 0.
inline const Complex kRootSixth{0.5, kSqrt3 / 2};
inline const Complex kRootThird{-0.5, kSqrt3 / 2};

/// True when x is within tol of a nonpositive integer.
inline bool near_nonpositive_integer(double x, double tol = kPoleTolerance) {
  const double r = std::nearbyint(x);
  return r <= 0.0 && std::abs(x - r) <= tol;
}

/// sin(pi x) with exact argument reduction.
inline double sinpi(double x) {
  double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

/// cos(pi x) with exact argument reduction.
inline double cospi(double x) {
  const double r = std::abs(std::remainder(x, 2.0));  // [0, 1]
  if (r == 0.5) return 0.0;
  if (r < 0.5) return std::cos(kPi * r);
  return -std::cos(kPi * (1.0 - r));
}

inline Complex cospi(Complex x) {
  const double h = kPi * x.imag();
  return {cospi(x.real()) * std::cosh(h), -sinpi(x.real()) * std::sinh(h)};
}

inline Complex sinpi(Complex x) {
  const double h = kPi * x.imag();
  return {sinpi(x.real()) * std::cosh(h), cospi(x.real()) * std::sinh(h)};
}

/// 3^x for real or complex x.
inline double pow3(double x) { return std::pow(3.0, x); }
inline Complex pow3(Complex x) { return std::exp(kLn3 * x); }

/// Drops a signed zero imaginary part so that arg() lands in (-pi, pi].
inline Complex normalize_zero_imag(Complex z) {
  if (z.imag() == 0.0) return {z.real(), 0.0};
  return z;
}

/// True when z is within tol of the negative real axis (the cube-root cut).
inline bool near_branch_cut(Complex z, double tol = 1e-12) {
  return z.real() < 0.0 && std::abs(z.imag()) <= tol;
}

/// Scale-aware closeness for doubles.
inline double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace hyp3f2
