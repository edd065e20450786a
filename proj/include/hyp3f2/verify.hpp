#pragma once

// Verification suites: each runs one module's invariants over seeded or
// fixed grids and collects one record per sub-check, ordered by name.

#include "hyp3f2/binomsum.hpp"
#include "hyp3f2/closed_forms.hpp"
#include "hyp3f2/identities.hpp"
#include "hyp3f2/pochhammer.hpp"
#include "hyp3f2/rational.hpp"
#include "hyp3f2/report.hpp"
#include "hyp3f2/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyp3f2 {

inline constexpr std::uint64_t kDefaultSeed = 20240001;

/// Deterministic source of uniform doubles. Draws are built from the raw
/// 64-bit engine output so they are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  /// Uniform in [lo, hi] at least `clearance` from every point in `avoid`.
  double uniform_avoiding(double lo, double hi, const std::vector<double>& avoid, double clearance) {
    for (;;) {
      const double x = uniform(lo, hi);
      const bool clear = std::all_of(avoid.begin(), avoid.end(),
                                     [&](double p) { return std::abs(x - p) >= clearance; });
      if (clear) return x;
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class CheckResult { Pass, Fail, Skip };

inline std::string_view to_string(CheckResult r) {
  switch (r) {
    case CheckResult::Pass: return "pass";
    case CheckResult::Fail: return "fail";
    case CheckResult::Skip: return "skip";
  }
  return "unknown";
}

struct CheckRecord {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  Complex lhs{};
  Complex rhs{};
  double rel_err = 0.0;
  CheckResult result = CheckResult::Pass;
  std::string note;
  std::optional<std::string> lhs_exact;
  std::optional<std::string> rhs_exact;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 1e-10;
  std::vector<CheckRecord> checks;

  std::size_t count(CheckResult r) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [r](const CheckRecord& c) { return c.result == r; }));
  }
  bool ok() const { return count(CheckResult::Fail) == 0; }
};

inline constexpr std::array<std::string_view, 6> kSuiteNames = {"pochhammer", "binomsum", "closedforms",
                                                                 "transforms", "ode",      "all"};

struct VerifyConfig {
  std::uint64_t seed = kDefaultSeed;
  /// Series-oracle tolerance.
  double tol = 1e-10;
};

namespace detail {

using Params = std::vector<std::pair<std::string, double>>;

inline std::string indexed(std::string_view prefix, std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04zu", i);
  return std::string(prefix) + "/" + buf;
}

inline CheckRecord to_record(std::string name, Params params, const IdentityReport& r) {
  CheckRecord c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.lhs = r.lhs;
  c.rhs = r.rhs;
  c.rel_err = r.rel_err;
  c.result = r.skipped ? CheckResult::Skip : (r.pass ? CheckResult::Pass : CheckResult::Fail);
  c.note = r.note;
  c.lhs_exact = r.lhs_exact;
  c.rhs_exact = r.rhs_exact;
  return c;
}

inline void sort_checks(SuiteReport& rep) {
  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckRecord& x, const CheckRecord& y) { return x.name < y.name; });
}

/// Closed value against a series oracle: pass iff
/// |closed - oracle| <= max(10 * error_estimate, rel * |closed|) and the
/// oracle reported convergence.
inline IdentityReport oracle_compare(std::string name, Complex closed, const SeriesEval& oracle, double rel) {
  IdentityReport r = compare(std::move(name), closed, oracle.value, rel, "closed form", "series");
  const double allowed = std::max(10.0 * oracle.error_estimate, rel * std::abs(closed));
  r.pass = oracle.ok() && std::isfinite(r.abs_err) && r.abs_err <= allowed;
  r.note = std::string(to_string(oracle.status)) + ", " + std::to_string(oracle.terms_used) + " terms" +
           (oracle.extrapolated ? ", extrapolated" : "");
  return r;
}

inline double family_oracle_rel(FamilyId f) {
  const auto z = family_info(f).z;
  return z && *z < 0.0 ? 1e-8 : 1e-9;
}

/// Sample a for a fixed-z family strictly inside its oracle domain.
inline double sample_family_a(Sampler& s, FamilyId f, double lo = -3.0) {
  const auto& dom = family_info(f).domain;
  return s.uniform_avoiding(lo, dom.re_a_upper_bound - 0.05, dom.excluded_points, 0.05);
}

}  // namespace detail

/// Pochhammer product identities in exact rational arithmetic.
inline SuiteReport verify_pochhammer(const VerifyConfig& cfg = {}) {
  SuiteReport rep{"pochhammer", cfg.seed, 0.0, {}};
  const std::array<unsigned, 7> orders = {0, 1, 2, 5, 10, 20, 30};
  for (long long q = 1; q <= 6; ++q)
    for (long long p = -2 * q; p <= 2 * q; ++p) {
      const ExactRational a(p, q);
      if (a.denominator() != q) continue;  // each rational once, at its own denominator
      for (unsigned n : orders) {
        const detail::Params params = {{"a", a.to_double()}, {"n", n}};
        const std::string tag = "a=" + a.str() + "/n=" + std::to_string(n);
        rep.checks.push_back(detail::to_record("pochhammer/duplication/" + tag, params, check_duplication(a, n)));
        const auto tri = check_triplication(a, n);
        for (const auto& part : tri.parts)
          rep.checks.push_back(detail::to_record("pochhammer/" + part.name + "/" + tag, params, part));
      }
    }
  for (int k = 1; k <= 7; ++k)
    for (unsigned n = 0; n <= kExactIdentityCap; ++n) {
      char tag[32];
      std::snprintf(tag, sizeof tag, "case%d/n=%02u", k, n);
      rep.checks.push_back(detail::to_record(std::string("pochhammer/") + tag, {{"case", k}, {"n", n}},
                                             check_case_identity(k, n)));
    }
  for (unsigned n = 0; n <= kExactIdentityCap; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      char tag[40];
      std::snprintf(tag, sizeof tag, "binomial/n=%02u/k=%02u", n, k);
      rep.checks.push_back(
          detail::to_record(std::string("pochhammer/") + tag, {{"n", n}, {"k", k}}, check_binomial_relation(n, k)));
    }
  detail::sort_checks(rep);
  return rep;
}

/// Alternating binomial sums: finite sums, relations, scaling law, slopes,
/// the z-general parent, and direct summation against the closed forms.
inline SuiteReport verify_binomsum(const VerifyConfig& cfg = {}) {
  SuiteReport rep{"binomsum", cfg.seed, cfg.tol, {}};
  Sampler rng(cfg.seed);

  for (BinomSumId j : kAllBinomSums)
    for (unsigned n = 0; n <= 60; ++n) {
      const ExactRational exact(f3j_exact(j, n));
      const ExactRational rounded(f3j_closed_rounded(j, n));
      char tag[48];
      std::snprintf(tag, sizeof tag, "binomsum/finite/%s/n=%02u", to_string(j).c_str(), n);
      rep.checks.push_back(detail::to_record(tag, {{"j", index_of(j)}, {"n", n}},
                                             compare_exact(tag, exact, rounded, "exact sum", "rounded closed form")));
    }

  constexpr int kGrid = 1000;
  for (int i = 0; i < kGrid; ++i) {
    const double a = -10.0 + 20.0 * i / (kGrid - 1);
    const auto rel = check_relations(a);
    for (const auto& part : rel.parts) {
      const std::string kind = part.name.substr(0, part.name.find(' '));
      rep.checks.push_back(detail::to_record(detail::indexed("binomsum/relation/" + kind, i), {{"a", a}}, part));
    }
    for (BinomSumId j : kAllBinomSums)
      rep.checks.push_back(detail::to_record(detail::indexed("binomsum/scaling/" + to_string(j), i), {{"a", a}},
                                             check_functional_equation(j, a)));
  }
  for (int n = 12; n <= 30; ++n) {
    const double a = -n / 3.0;
    for (BinomSumId j : kAllBinomSums)
      rep.checks.push_back(detail::to_record(detail::indexed("binomsum/scaling_finite/" + to_string(j), n),
                                             {{"a", a}}, check_functional_equation(j, a)));
  }

  const std::array<double, 3> expected_slopes = {-kLn3, -kLn3 / 2.0 - kSqrt3 * kPi / 6.0,
                                                 (3.0 * kLn3 - kSqrt3 * kPi) / 6.0};
  for (BinomSumId j : kAllBinomSums) {
    const auto closed = [j](Complex x) { return f3j_closed(j, x); };
    const std::string base = "binomsum/slope/" + to_string(j);
    rep.checks.push_back(detail::to_record(
        base + "/analytic", {{"a", 0.0}},
        compare(base, initial_slope(j), expected_slopes[index_of(j)], 1e-12, "f'(0)", "elementary value")));
    rep.checks.push_back(detail::to_record(base + "/complex_step", {{"a", 0.0}},
                                           compare(base, complex_step_derivative(closed, 0.0),
                                                   expected_slopes[index_of(j)], 1e-12, "complex step",
                                                   "elementary value")));
  }

  // f30(a; z) = 3F2(a, a+1/3, a+2/3; 1/3, 2/3; -z), and f30(a; -1) = f30(a)
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(-3.0, 2.0);
    const Complex z = std::polar(rng.uniform(0.05, 0.9), rng.uniform(-3.0, 3.0));
    auto params = family_params(FamilyId::P1_A, a, -z);
    const auto oracle = eval_series(params, cfg.tol);
    rep.checks.push_back(detail::to_record(detail::indexed("binomsum/f30_z/series", i),
                                           {{"a", a}, {"z_re", z.real()}, {"z_im", z.imag()}},
                                           detail::oracle_compare("f30_z", f30_z(a, z).value, oracle, 1e-9)));
  }
  for (int i = 0; i <= 140; ++i) {
    const double a = -5.0 + 7.0 * i / 140.0;
    rep.checks.push_back(detail::to_record(detail::indexed("binomsum/f30_z/at_minus_one", i), {{"a", a}},
                                           compare("f30_z", f30_z(a, Complex(-1.0)).value, f30_closed(a), 1e-12,
                                                   "f30(a; -1)", "f30 closed", f3j_envelope(a))));
  }

  for (int i = 0; i < 300; ++i) {
    const double a = rng.uniform(-4.0, -0.05);
    for (BinomSumId j : kAllBinomSums) {
      const auto direct = f3j_direct(j, a, cfg.tol);
      rep.checks.push_back(detail::to_record(
          detail::indexed("binomsum/direct/" + to_string(j), static_cast<std::size_t>(i)), {{"a", a}},
          detail::oracle_compare(to_string(j), f3j_closed(j, a), direct, 1e-10)));
    }
  }
  detail::sort_checks(rep);
  return rep;
}

/// Closed forms against the series oracle, against each other and against
/// the binomial sums.
inline SuiteReport verify_closedforms(const VerifyConfig& cfg = {}, int points_per_family = 60) {
  SuiteReport rep{"closedforms", cfg.seed, cfg.tol, {}};
  Sampler rng(cfg.seed);

  for (FamilyId f : kFixedZFamilies) {
    const std::string base = "closedforms/oracle/" + std::string(to_string(f));
    for (int i = 0; i < points_per_family; ++i) {
      const double a = detail::sample_family_a(rng, f);
      const auto oracle = eval_series(family_params(f, a), cfg.tol);
      rep.checks.push_back(detail::to_record(detail::indexed(base, i), {{"a", a}},
                                             detail::oracle_compare(base, eval_family(f, a), oracle,
                                                                    detail::family_oracle_rel(f))));
    }
  }

  for (int i = 0; i <= 100; ++i) {
    const double a = -5.0 + 5.0 * i / 100.0;
    const double t = 1.0 / 3.0;
    const detail::Params ap = {{"a", a}};
    rep.checks.push_back(detail::to_record(detail::indexed("closedforms/binomsum/P1_A", i), ap,
                                           compare("P1_A", eval_family(FamilyId::P1_A, a), f30_closed(a), 1e-12,
                                                   "P1_A", "f30(a)")));
    rep.checks.push_back(
        detail::to_record(detail::indexed("closedforms/binomsum/P1_B", i), ap,
                          compare("P1_B", (1.0 - 3.0 * a) * eval_family(FamilyId::P1_B, a), f31_closed(a - t),
                                  1e-12, "(1-3a) P1_B", "f31(a-1/3)", f3j_envelope(a - t))));
    if (a == 0.0) continue;  // above the P1_C consistency range only at the pole-free endpoint
    rep.checks.push_back(detail::to_record(
        detail::indexed("closedforms/binomsum/P1_C", i), ap,
        compare("P1_C", (1.0 - 3.0 * a) * (2.0 - 3.0 * a) / 2.0 * eval_family(FamilyId::P1_C, a),
                f32_closed(a - 2.0 * t), 1e-12, "(1-3a)(2-3a)/2 P1_C", "f32(a-2/3)", f3j_envelope(a - 2.0 * t))));
  }

  for (FamilyId f : {FamilyId::G_23_43, FamilyId::G_53_73}) {
    const std::string base = "closedforms/oracle/" + std::string(to_string(f));
    const auto& excl = family_info(f).domain.excluded_points;
    for (int i = 0; i < 50; ++i) {
      const double a = rng.uniform_avoiding(-3.0, 2.0, excl, 0.05);
      const double z = rng.uniform(0.1, 0.9);
      const auto oracle = eval_series(family_params(f, a, Complex(z)), cfg.tol);
      const auto closed = eval_z_general(f, a, Complex(z));
      rep.checks.push_back(detail::to_record(detail::indexed(base, i), {{"a", a}, {"z", z}},
                                             detail::oracle_compare(base, closed.value, oracle, 1e-9)));
      const double im = std::abs(closed.value.imag());
      IdentityReport real = compare(base + " realness", im, 0.0, 0.0, "|Im value|", "0", 1.0);
      real.pass = im <= 1e-12 * std::abs(closed.value);
      real.rel_err = im / std::abs(closed.value);
      rep.checks.push_back(detail::to_record(detail::indexed(base + "/realness", i), {{"a", a}, {"z", z}}, real));
    }
  }

  // z = +-1: the z-general forms against the fixed-z ones
  const std::array<std::pair<FamilyId, FamilyId>, 4> pairs = {{{FamilyId::P1_B, FamilyId::G_23_43},
                                                               {FamilyId::P4_B, FamilyId::G_23_43},
                                                               {FamilyId::P3_1, FamilyId::G_53_73},
                                                               {FamilyId::P3_M1, FamilyId::G_53_73}}};
  for (const auto& [fixed, general] : pairs) {
    const std::string base = "closedforms/unit_z/" + std::string(to_string(fixed));
    const double z = *family_info(fixed).z;
    for (int i = 0; i < 25; ++i) {
      const double a = detail::sample_family_a(rng, fixed);
      rep.checks.push_back(detail::to_record(detail::indexed(base, i), {{"a", a}, {"z", z}},
                                             compare(base, eval_z_general(general, a, Complex(z)).value,
                                                     eval_family(fixed, a), 1e-11, to_string(general).data(),
                                                     to_string(fixed).data())));
    }
  }

  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform_avoiding(-3.0, 2.0, family_info(FamilyId::G_53_73).domain.excluded_points, 0.05);
    const double z = rng.uniform(0.1, 0.9);
    rep.checks.push_back(detail::to_record(
        detail::indexed("closedforms/chain_step", i), {{"a", a}, {"z", z}},
        compare("chain_step", chain_step(FamilyId::G_23_43, a - 1.0, Complex(z)).value,
                eval_G_53_73(a, Complex(z)).value, 1e-8, "chain_step(G_23_43, a-1)", "G_53_73")));
  }

  // value * distance must not grow on approach to an excluded point
  for (FamilyId f : kFixedZFamilies) {
    std::size_t k = 0;
    for (double x : family_info(f).domain.excluded_points)
      for (double side : {-1.0, 1.0}) {
        const double far = std::abs(eval_family(f, x + side * 1e-3)) * 1e-3;
        const double near = std::abs(eval_family(f, x + side * 1e-7)) * 1e-7;
        IdentityReport r = compare("pole approach", near, far, 0.0, "|f| d at d=1e-7", "|f| d at d=1e-3", 1.0);
        r.pass = near <= 2.0 * far + 1e-6;
        r.note = "excluded point " + std::to_string(x);
        rep.checks.push_back(detail::to_record(
            detail::indexed("closedforms/pole_approach/" + std::string(to_string(f)), k++),
            {{"a", x + side * 1e-7}}, r));
      }
  }
  detail::sort_checks(rep);
  return rep;
}

/// Transformations on seeded random tuples, and the P1_A route.
inline SuiteReport verify_transforms(const VerifyConfig& cfg = {}, int tuples = 500) {
  SuiteReport rep{"transforms", cfg.seed, kTransformTolerance, {}};
  Sampler rng(cfg.seed);
  for (Transformation t : kAllTransformations) {
    const std::string base = "transforms/" + std::string(to_string(t));
    for (int i = 0; i < tuples; ++i) {
      HypParams p;
      p.upper = {rng.uniform(-1.0, 0.8), rng.uniform(-1.0, 0.8), rng.uniform(-1.0, 0.8)};
      p.lower = {rng.uniform(0.6, 2.5), rng.uniform(0.6, 2.5)};
      p.z = 1.0;
      const detail::Params params = {{"a", p.upper[0]}, {"b", p.upper[1]}, {"c", p.upper[2]},
                             {"d", p.lower[0]}, {"e", p.lower[1]}};
      rep.checks.push_back(detail::to_record(detail::indexed(base, i), params, check_transformation(t, p)));
    }
  }
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform_avoiding(-1.0, -0.1, {-1.0, -0.5}, 0.02);
    const auto route = p1a_via_transformation(a);
    IdentityReport r = route.value ? compare("P1_A route", *route.value, eval_family(FamilyId::P1_A, a), 1e-7,
                                             "transformed series", "P1_A closed form")
                                   : skipped_report("P1_A route", route.skip_reason);
    rep.checks.push_back(detail::to_record(detail::indexed("transforms/P1_A_route", i), {{"a", a}}, r));
  }
  detail::sort_checks(rep);
  return rep;
}

/// The two ODE residuals and the digamma derivative series.
inline SuiteReport verify_ode(const VerifyConfig& cfg = {}) {
  SuiteReport rep{"ode", cfg.seed, cfg.tol, {}};
  Sampler rng(cfg.seed);
  auto residual_record = [](std::string name, double a, double res, double bound) {
    IdentityReport r = compare(name, res, 0.0, bound, "scaled residual", "0", 1.0);
    r.pass = res <= bound;
    r.rel_err = res;
    return detail::to_record(std::move(name), {{"a", a}}, r);
  };
  for (int i = 0; i < 100; ++i) {
    const double a = -3.0 + 6.0 * i / 99.0;
    rep.checks.push_back(residual_record(detail::indexed("ode/u", i), a, ode_residual_u(a), 1e-5));
  }
  for (int i = 0, k = 0; i < 120; ++i) {
    const double a = -3.0 + 3.3 * i / 119.0;
    if (std::abs(a - 1.0 / 3.0) < 0.05) continue;
    rep.checks.push_back(residual_record(detail::indexed("ode/u2", k++), a, ode_residual_u2(a), 1e-4));
  }
  std::vector<double> digamma_poles;
  for (int k = 1; k <= 9; ++k) digamma_poles.push_back(-k / 3.0);
  const double tol = std::max(cfg.tol, 1e-10);
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform_avoiding(-3.0, -0.1, digamma_poles, 0.01);
    rep.checks.push_back(detail::to_record(detail::indexed("ode/digamma_series", i), {{"a", a}}, corollary_sum(a, tol)));
    const auto closed = [](Complex x) { return f3j_closed(BinomSumId::F30, x); };
    const double rhs = corollary_sum(a, tol).rhs.real();
    rep.checks.push_back(detail::to_record(detail::indexed("ode/digamma_series_slope", i), {{"a", a}},
                                           compare("digamma_series slope", rhs, complex_step_derivative(closed, a),
                                                   1e-12, "elementary form", "complex step on f30")));
  }
  detail::sort_checks(rep);
  return rep;
}

/// Runs a suite by name; "all" concatenates the others.
inline SuiteReport run_suite(std::string_view name, const VerifyConfig& cfg = {}) {
  if (name == "pochhammer") return verify_pochhammer(cfg);
  if (name == "binomsum") return verify_binomsum(cfg);
  if (name == "closedforms") return verify_closedforms(cfg);
  if (name == "transforms") return verify_transforms(cfg);
  if (name == "ode") return verify_ode(cfg);
  if (name == "all") {
    SuiteReport rep{"all", cfg.seed, cfg.tol, {}};
    for (std::string_view s : kSuiteNames) {
      if (s == "all") continue;
      auto part = run_suite(s, cfg);
      for (auto& c : part.checks) rep.checks.push_back(std::move(c));
    }
    detail::sort_checks(rep);
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace hyp3f2
