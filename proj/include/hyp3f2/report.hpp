#pragma once

#include "hyp3f2/numeric.hpp"
#include "hyp3f2/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyp3f2 {

/// Below this magnitude of the reference side a check is judged on absolute error.
inline constexpr double kAbsoluteJudgementFloor = 1e-8;

/// Two independently computed values of one quantity and the verdict.
struct IdentityReport {
  std::string name;
  Complex lhs{};
  Complex rhs{};
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string lhs_route;
  std::string rhs_route;
  std::optional<std::string> lhs_exact;  ///< "p/q" for exact-arithmetic checks
  std::optional<std::string> rhs_exact;
  std::string note;
};

/// Builds a report. rel_err is abs_err over `scale`, which defaults to |rhs|;
/// callers checking linear relations pass the magnitude of the participating terms.
inline IdentityReport compare(std::string name, Complex lhs, Complex rhs, double tolerance,
                              std::string lhs_route, std::string rhs_route,
                              std::optional<double> scale = std::nullopt) {
  IdentityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.lhs_route = std::move(lhs_route);
  r.rhs_route = std::move(rhs_route);
  r.abs_err = std::abs(lhs - rhs);
  const double s = scale.value_or(std::abs(rhs));
  if (!std::isfinite(r.abs_err)) {
    r.rel_err = std::numeric_limits<double>::infinity();
    r.pass = false;
    return r;
  }
  r.rel_err = s > 0.0 ? r.abs_err / s : (r.abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  r.pass = s < kAbsoluteJudgementFloor ? r.abs_err <= tolerance : r.rel_err <= tolerance;
  return r;
}

/// Exact comparison: passes iff both sides are identical rationals.
inline IdentityReport compare_exact(std::string name, const ExactRational& lhs, const ExactRational& rhs,
                                    std::string lhs_route, std::string rhs_route) {
  IdentityReport r;
  r.name = std::move(name);
  r.lhs = lhs.to_double();
  r.rhs = rhs.to_double();
  r.lhs_exact = lhs.str();
  r.rhs_exact = rhs.str();
  r.lhs_route = std::move(lhs_route);
  r.rhs_route = std::move(rhs_route);
  r.pass = lhs == rhs;
  const ExactRational diff = lhs - rhs;
  r.abs_err = std::abs(diff.to_double());
  r.rel_err = rhs == ExactRational(0) ? r.abs_err : std::abs((diff / rhs).to_double());
  return r;
}

/// A skipped check: preconditions not met, so no verdict either way.
inline IdentityReport skipped_report(std::string name, std::string note) {
  IdentityReport r;
  r.name = std::move(name);
  r.skipped = true;
  r.pass = false;
  r.abs_err = r.rel_err = std::numeric_limits<double>::quiet_NaN();
  r.note = std::move(note);
  return r;
}

/// Several sub-reports produced by one check.
struct CompoundReport {
  std::vector<IdentityReport> parts;

  bool pass() const {
    return !parts.empty() && std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.pass; });
  }
  double max_rel_err() const {
    double m = 0.0;
    for (const auto& p : parts) m = std::max(m, p.rel_err);
    return m;
  }
};

}  // namespace hyp3f2
