#pragma once

// Brute-force evaluation of pFq series by term recurrence with convergence
// control. This is the ground truth the closed forms are checked against, so
// it never consults them.
//
// On |z| = 1 at z = +1 and z = -1 the tail decays algebraically, like
// j^{-1-s}, where s is the convergence margin. Near a domain edge plain
// summation would need ~tol^{-1/s} terms, so partial sums are also recorded at
// N = 2^k and extrapolated in N with the known tail exponents (s, s+1, ... for
// z = 1; 1+s, 2+s, ... for z = -1 at even N). The extrapolated value is only
// accepted once two successive extrapolations agree within tol.

#include "hyp3f2/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyp3f2 {

enum class SeriesStatus { Converged, Terminated, MaxTermsReached, DomainViolation };

inline std::string_view to_string(SeriesStatus s) {
  switch (s) {
    case SeriesStatus::Converged: return "converged";
    case SeriesStatus::Terminated: return "terminated";
    case SeriesStatus::MaxTermsReached: return "max_terms";
    case SeriesStatus::DomainViolation: return "domain_violation";
  }
  return "unknown";
}

struct SeriesEval {
  Complex value{};
  std::uint64_t terms_used = 0;
  double error_estimate = 0.0;
  SeriesStatus status = SeriesStatus::DomainViolation;
  bool conditional = false;   ///< |z| = 1 with margin s <= 0; estimate inflated x10
  bool extrapolated = false;  ///< value came from the dyadic tail extrapolation
  std::string warning;

  bool ok() const { return status == SeriesStatus::Converged || status == SeriesStatus::Terminated; }
};

/// Parameters (upper; lower; z) of a pFq series.
struct HypParams {
  std::vector<double> upper;
  std::vector<double> lower;
  Complex z{};
};

inline constexpr double kMinSeriesTolerance = 1e-14;
inline constexpr std::uint64_t kDefaultMaxTerms = 10'000'000;
inline constexpr double kConditionalInflation = 10.0;

struct SeriesOptions {
  std::uint64_t max_terms = kDefaultMaxTerms;
  bool extrapolate = true;
};

enum class TailKind { Geometric, UnitPositive, UnitAlternating, UnitPhase };

/// Asymptotic description of the term sequence, used for the error bound and
/// for choosing extrapolation exponents.
struct TailModel {
  TailKind kind = TailKind::Geometric;
  double ratio = 0.0;   ///< |z| for Geometric
  double margin = 0.0;  ///< convergence margin s for the unit-circle kinds
  int log_multiplicity = 1;  ///< 2 when terms carry an extra log j factor
};

namespace detail {

inline bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Neumaier compensated summation, componentwise.
class CompensatedSum {
 public:
  void add(Complex t) {
    add_part(re_, re_c_, t.real());
    add_part(im_, im_c_, t.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& s, double& c, double x) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

inline double tail_bound(double term_abs, std::uint64_t n, const TailModel& tail) {
  if (tail.kind == TailKind::Geometric) return term_abs / (1.0 - tail.ratio);
  if (tail.margin <= 0.0) return term_abs;
  return term_abs * std::max(1.0, static_cast<double>(n) / tail.margin);
}

struct Extrapolation {
  Complex value;
  double error;
};

// Deepest Richardson entry over partial sums at N_i = N_0 2^i, eliminating
// N^{-p_l} with p_l = p0 + floor(l / multiplicity).
inline Complex richardson_diagonal(std::vector<Complex> row, double p0, int multiplicity) {
  const std::size_t levels = row.size() - 1;
  for (std::size_t l = 0; l < levels; ++l) {
    const double p = p0 + static_cast<double>(l / static_cast<std::size_t>(multiplicity));
    const double denom = std::exp2(p) - 1.0;
    for (std::size_t i = row.size() - 1; i > l; --i) row[i] += (row[i] - row[i - 1]) / denom;
  }
  return row.back();
}

// Best estimate from the newest sums, with the error taken as its distance to
// the estimate that does not use the newest partial sum.
inline Extrapolation richardson(const std::vector<Complex>& sums, double p0, int multiplicity) {
  constexpr std::size_t kMaxLevels = 10;
  const std::size_t levels = std::min(sums.size() - 1, kMaxLevels);
  const auto last = sums.end();
  const auto first = last - static_cast<std::ptrdiff_t>(levels + 1);
  const Complex best = richardson_diagonal({first, last}, p0, multiplicity);
  const Complex older = richardson_diagonal({first, last - 1}, p0, multiplicity);
  const double floor = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(best);
  return {best, std::max(std::abs(best - older), floor)};
}

}  // namespace detail

/// Sums terms produced by next() (t_0, t_1, ...).
///
/// Plain rule: stop once |t_j| < prior |t| and the tail bound is below
/// tol*|S| for three consecutive terms. Unit-circle kinds at z = +-1 also try the
/// dyadic extrapolation. `exact_count` sums exactly that many terms (a
/// terminating series).
template <class Next>
SeriesEval sum_series(Next&& next, const TailModel& tail, double tol, const SeriesOptions& opt = {},
                      std::optional<std::uint64_t> exact_count = std::nullopt) {
  SeriesEval out;
  if (exact_count) {
    detail::CompensatedSum acc;
    double largest = 0.0;
    for (std::uint64_t n = 0; n < *exact_count; ++n) {
      const Complex t = next();
      largest = std::max(largest, std::abs(t));
      acc.add(t);
    }
    out.value = acc.value();
    out.terms_used = *exact_count;
    out.error_estimate = static_cast<double>(*exact_count) * std::numeric_limits<double>::epsilon() * largest;
    out.status = SeriesStatus::Terminated;
    return out;
  }

  const bool on_unit = tail.kind != TailKind::Geometric;
  out.conditional = on_unit && tail.margin <= 0.0;
  const double inflate = out.conditional ? kConditionalInflation : 1.0;
  if (out.conditional) out.warning = "conditionally convergent; error estimate inflated x10";

  const bool extrapolable = opt.extrapolate && (tail.kind == TailKind::UnitPositive ||
                                                tail.kind == TailKind::UnitAlternating);
  const double p0 = tail.kind == TailKind::UnitAlternating ? 1.0 + tail.margin : tail.margin;
  constexpr std::uint64_t kFirstDyadic = 32;
  constexpr std::uint64_t kFirstExtrapolation = 256;

  detail::CompensatedSum acc;
  Complex sum{};
  double prev_abs = std::numeric_limits<double>::infinity();
  int small_run = 0;
  int decreasing_run = 0;
  int extrap_hits = 0;
  double bound = std::numeric_limits<double>::infinity();
  std::vector<Complex> dyadic;
  std::optional<detail::Extrapolation> best_extrapolation;

  std::uint64_t n = 0;
  while (n < opt.max_terms) {
    ++n;
    const Complex t = next();
    acc.add(t);
    sum = acc.value();
    const double at = std::abs(t);
    bound = detail::tail_bound(at, n, tail) * inflate;
    const bool decreasing = at < prev_abs || at == 0.0;
    decreasing_run = decreasing ? decreasing_run + 1 : 0;
    const double target = tol * std::max(std::abs(sum), 1e-300);
    small_run = (decreasing && bound <= target) ? small_run + 1 : 0;
    prev_abs = at;

    if (!std::isfinite(std::abs(sum))) break;
    if (small_run >= 3) {
      out.value = sum;
      out.terms_used = n;
      out.error_estimate = bound;
      out.status = SeriesStatus::Converged;
      return out;
    }

    if (extrapolable && n >= kFirstDyadic && detail::is_power_of_two(n)) {
      dyadic.push_back(sum);
      if (n >= kFirstExtrapolation && dyadic.size() >= 4 && decreasing_run >= 3) {
        const auto ex = detail::richardson(dyadic, p0, tail.log_multiplicity);
        const double err = ex.error * inflate;
        if (std::isfinite(err) && (!best_extrapolation || err < best_extrapolation->error))
          best_extrapolation = detail::Extrapolation{ex.value, err};
        if (std::isfinite(err) && err <= tol * std::max(std::abs(ex.value), 1e-300)) {
          if (++extrap_hits >= 2) {
            out.value = ex.value;
            out.terms_used = n;
            out.error_estimate = err;
            out.status = SeriesStatus::Converged;
            out.extrapolated = true;
            return out;
          }
        } else {
          extrap_hits = 0;
        }
      }
    }
  }
  out.value = sum;
  out.terms_used = n;
  out.error_estimate = bound;
  if (best_extrapolation && best_extrapolation->error < bound) {
    out.value = best_extrapolation->value;
    out.error_estimate = best_extrapolation->error;
    out.extrapolated = true;
  }
  out.status = SeriesStatus::MaxTermsReached;
  if (!out.warning.empty()) out.warning += "; ";
  out.warning += std::isfinite(std::abs(sum)) ? "term cap reached before convergence" : "partial sum overflowed";
  return out;
}

namespace detail {

inline SeriesEval domain_violation(std::string why) {
  SeriesEval out;
  out.status = SeriesStatus::DomainViolation;
  out.value = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  out.error_estimate = std::numeric_limits<double>::infinity();
  out.warning = std::move(why);
  return out;
}

inline void require_tolerance(double tol) {
  if (!(tol >= kMinSeriesTolerance))
    throw std::invalid_argument("series tolerance must be >= 1e-14");
}

}  // namespace detail

/// Convergence margin s = Re(sum lower - sum upper).
inline double convergence_margin(const HypParams& p) {
  return std::accumulate(p.lower.begin(), p.lower.end(), 0.0) -
         std::accumulate(p.upper.begin(), p.upper.end(), 0.0);
}

/// Brute-force pFq(upper; lower; z) by t_{j+1} = t_j z prod(u+j) / (prod(l+j)(j+1)).
inline SeriesEval eval_series(const HypParams& params, double tol, const SeriesOptions& opt = {}) {
  detail::require_tolerance(tol);
  for (double v : params.upper)
    if (!std::isfinite(v)) throw std::invalid_argument("eval_series: non-finite upper parameter");
  for (double v : params.lower)
    if (!std::isfinite(v)) throw std::invalid_argument("eval_series: non-finite lower parameter");

  // Sorted copies make the result independent of parameter order, bit for bit.
  std::vector<double> upper = params.upper;
  std::vector<double> lower = params.lower;
  std::sort(upper.begin(), upper.end());
  std::sort(lower.begin(), lower.end());
  const Complex z = normalize_zero_imag(params.z);
  const double r = std::abs(z);
  if (!std::isfinite(r)) throw std::invalid_argument("eval_series: non-finite argument");

  std::optional<std::uint64_t> degree;
  for (double u : upper) {
    if (near_nonpositive_integer(u)) {
      const auto m = static_cast<std::uint64_t>(-std::nearbyint(u));
      degree = degree ? std::min(*degree, m) : m;
    }
  }
  for (double l : lower) {
    if (near_nonpositive_integer(l)) {
      const auto k = static_cast<std::uint64_t>(-std::nearbyint(l));
      if (!degree || k < *degree) return detail::domain_violation("lower parameter at a nonpositive integer");
    }
  }

  std::uint64_t j = 0;
  Complex term{1.0, 0.0};
  bool first = true;
  auto next = [&]() -> Complex {
    if (first) {
      first = false;
      return term;
    }
    const double jd = static_cast<double>(j);
    double num = 1.0;
    for (double u : upper) num *= u + jd;
    double den = jd + 1.0;
    for (double l : lower) den *= l + jd;
    term *= z * (num / den);
    ++j;
    return term;
  };

  if (degree) return sum_series(next, TailModel{}, tol, opt, *degree + 1);

  if (r > 1.0 + 1e-14) return detail::domain_violation("|z| > 1");
  TailModel tail;
  const double s = convergence_margin(params);
  if (std::abs(r - 1.0) <= 1e-12) {
    tail.margin = s;
    if (std::abs(z - 1.0) <= 1e-12) {
      if (!(s > 0.0)) return detail::domain_violation("z = 1 requires convergence margin s > 0");
      tail.kind = TailKind::UnitPositive;
    } else {
      if (!(s > -1.0)) return detail::domain_violation("|z| = 1 requires convergence margin s > -1");
      tail.kind = std::abs(z + 1.0) <= 1e-12 ? TailKind::UnitAlternating : TailKind::UnitPhase;
    }
  } else {
    tail.kind = TailKind::Geometric;
    tail.ratio = r;
  }
  return sum_series(next, tail, tol, opt);
}

/// d/dz pFq = (prod upper / prod lower) pFq(upper + 1; lower + 1; z).
inline SeriesEval eval_series_dz(const HypParams& params, double tol, const SeriesOptions& opt = {}) {
  detail::require_tolerance(tol);
  double num = 1.0;
  for (double u : params.upper) num *= std::abs(u) <= 1e-12 ? 0.0 : u;
  double den = 1.0;
  for (double l : params.lower) den *= l;
  if (den == 0.0) return detail::domain_violation("lower parameter is zero");
  if (num == 0.0) {
    SeriesEval out;
    out.status = SeriesStatus::Terminated;
    out.value = 0.0;
    return out;
  }
  HypParams shifted = params;
  for (double& u : shifted.upper) u += 1.0;
  for (double& l : shifted.lower) l += 1.0;
  SeriesEval out = eval_series(shifted, tol, opt);
  const double factor = num / den;
  out.value *= factor;
  out.error_estimate *= std::abs(factor);
  return out;
}

}  // namespace hyp3f2
