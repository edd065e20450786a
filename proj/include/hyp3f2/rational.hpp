#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyp3f2 {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Serializes as "p/q".
class ExactRational {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  ExactRational() = default;
  ExactRational(long long n) : value_(n) {}  // NOLINT: implicit from integers
  ExactRational(const BigInt& n) : value_(n) {}  // NOLINT
  ExactRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("ExactRational: zero denominator");
    value_ = den < 0 ? value_type(-num, -den) : value_type(num, den);
  }
  ExactRational(long long num, long long den) : ExactRational(BigInt(num), BigInt(den)) {}
  explicit ExactRational(value_type v) : value_(std::move(v)) {}

  /// Parses "p/q" or "p".
  static ExactRational parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return ExactRational(BigInt(std::string(text)));
      return ExactRational(BigInt(std::string(text.substr(0, slash))),
                           BigInt(std::string(text.substr(slash + 1))));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("ExactRational: malformed '" + std::string(text) + "'");
    }
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  const value_type& value() const { return value_; }

  std::string str() const { return numerator().str() + "/" + denominator().str(); }
  double to_double() const { return value_.convert_to<double>(); }

  ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
  ExactRational& operator/=(const ExactRational& o) {
    if (o.value_ == 0) throw std::domain_error("ExactRational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend ExactRational operator-(const ExactRational& a) { return ExactRational(value_type(-a.value_)); }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  value_type value_{0};
};

inline ExactRational pow(const ExactRational& base, unsigned exponent) {
  ExactRational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

inline BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

/// Exact binomial coefficient C(n, k) for integers n >= 0; zero when k > n.
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace hyp3f2
