#pragma once

#include <complex>
#include <type_traits>

namespace hyp3f2 {

/// Forward-mode derivative carrier: v + d*eps with eps^2 = 0.
///
/// Used to differentiate the z-general closed forms in z. Those forms are
/// evaluated in complex arithmetic, so their imaginary part on the real axis
/// is rounding noise rather than zero, which rules out the complex-step trick.
template <class T>
struct Dual {
  T v{};
  T d{};

  constexpr Dual() = default;
  constexpr Dual(T value, T deriv = T{}) : v(value), d(deriv) {}

  static constexpr Dual variable(T value) { return Dual(value, T{1}); }

  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  Dual& operator/=(const Dual& o) {
    d = (d * o.v - v * o.d) / (o.v * o.v);
    v /= o.v;
    return *this;
  }
};

template <class T> Dual<T> operator-(const Dual<T>& a) { return {-a.v, -a.d}; }

template <class T> Dual<T> operator+(Dual<T> a, const Dual<T>& b) { return a += b; }
template <class T> Dual<T> operator-(Dual<T> a, const Dual<T>& b) { return a -= b; }
template <class T> Dual<T> operator*(Dual<T> a, const Dual<T>& b) { return a *= b; }
template <class T> Dual<T> operator/(Dual<T> a, const Dual<T>& b) { return a /= b; }

template <class T> Dual<T> operator+(Dual<T> a, const std::type_identity_t<T>& b) { a.v += b; return a; }
template <class T> Dual<T> operator+(const std::type_identity_t<T>& b, Dual<T> a) { a.v += b; return a; }
template <class T> Dual<T> operator-(Dual<T> a, const std::type_identity_t<T>& b) { a.v -= b; return a; }
template <class T> Dual<T> operator-(const std::type_identity_t<T>& b, const Dual<T>& a) { return {b - a.v, -a.d}; }
template <class T> Dual<T> operator*(Dual<T> a, const std::type_identity_t<T>& b) { a.v *= b; a.d *= b; return a; }
template <class T> Dual<T> operator*(const std::type_identity_t<T>& b, Dual<T> a) { a.v *= b; a.d *= b; return a; }
template <class T> Dual<T> operator/(Dual<T> a, const std::type_identity_t<T>& b) { a.v /= b; a.d /= b; return a; }
template <class T> Dual<T> operator/(const std::type_identity_t<T>& b, const Dual<T>& a) {
  return {b / a.v, -b * a.d / (a.v * a.v)};
}

template <class T> struct is_dual : std::false_type {};
template <class T> struct is_dual<Dual<T>> : std::true_type {};

}  // namespace hyp3f2
