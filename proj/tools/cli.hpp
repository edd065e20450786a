#pragma once

// Command-line front end: eval, verify, table and oeis subcommands.
// run_cli() does all the work so tests can drive it in-process.

#include "hyp3f2/hyp3f2.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hyp3f2::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kVerifyFailed = 3 };

using json = nlohmann::ordered_json;

/// 17 significant digits, "NA" for non-finite values.
inline std::string fmt(double x) {
  if (!std::isfinite(x)) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

/// Parses "re,im" or "re".
inline std::optional<Complex> parse_complex(const std::string& s) {
  std::istringstream is(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) return std::nullopt;
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) return std::nullopt;
  }
  is >> std::ws;
  if (!is.eof()) return std::nullopt;
  return Complex(re, im);
}

struct Range {
  double start = 0.0, end = 0.0, step = 0.0;

  std::size_t count() const { return static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1; }
  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

/// Parses "start:end:step" with start <= end and step > 0.
inline std::optional<Range> parse_range(const std::string& s) {
  Range r;
  char c1 = 0, c2 = 0;
  std::istringstream is(s);
  if (!(is >> r.start >> c1 >> r.end >> c2 >> r.step) || c1 != ':' || c2 != ':') return std::nullopt;
  is >> std::ws;
  if (!is.eof()) return std::nullopt;
  if (!std::isfinite(r.start) || !std::isfinite(r.end) || !(r.step > 0.0) || r.start > r.end) return std::nullopt;
  if (r.count() > 1'000'000) return std::nullopt;
  return r;
}

struct Options {
  std::string family;
  std::string sum;
  double a = 0.0;
  std::string z;
  std::string route = "closed";
  std::string suite;
  std::string a_range;
  int j = -1;
  unsigned n_max = 0;
  double tol = 1e-10;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::string out_path;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// What eval/table compute for one target: a closed value and optionally a
/// series value.
struct Target {
  std::optional<FamilyId> family;
  std::optional<BinomSumId> sum;
  std::optional<Complex> z;

  std::string name() const { return family ? std::string(to_string(*family)) : to_string(*sum); }

  ZEval closed(double a) const {
    if (family) {
      if (is_fixed_z(*family)) return {eval_family(*family, a), false};
      return eval_z_general(*family, a, *z);
    }
    if (z) return f30_z(a, *z);
    return {f3j_closed(*sum, a), false};
  }

  SeriesEval series(double a, double tol) const {
    if (family) return eval_series(family_params(*family, a, z), tol);
    if (z) return eval_series(family_params(FamilyId::P1_A, a, -*z), tol);
    return f3j_direct(*sum, a, tol);
  }
};

inline Target resolve_target(const Options& o) {
  if (o.family.empty() == o.sum.empty()) throw UsageError("give exactly one of --family or --sum");
  Target t;
  if (!o.z.empty()) {
    t.z = parse_complex(o.z);
    if (!t.z) throw UsageError("--z must be 're,im'");
  }
  if (!o.family.empty()) {
    t.family = parse_family(o.family);
    if (!t.family) throw UsageError("unknown family '" + o.family + "'");
    if (is_fixed_z(*t.family) && t.z) throw UsageError(o.family + " has a fixed z; drop --z");
    if (!is_fixed_z(*t.family) && !t.z) throw UsageError(o.family + " needs --z");
  } else {
    if (o.sum != "f30" && o.sum != "f31" && o.sum != "f32") throw UsageError("unknown sum '" + o.sum + "'");
    t.sum = binom_sum_id(o.sum[2] - '0');
    if (t.z && *t.sum != BinomSumId::F30) throw UsageError("--z is only available for f30");
  }
  return t;
}

inline void check_tol(double tol) {
  if (!(tol >= kMinSeriesTolerance)) throw UsageError("--tol must be >= 1e-14");
}

inline json series_json(const SeriesEval& s) {
  json j;
  j["value"] = number_or_null(s.value.real());
  if (s.value.imag() != 0.0) j["value_im"] = number_or_null(s.value.imag());
  j["terms"] = s.terms_used;
  j["error_estimate"] = number_or_null(s.error_estimate);
  j["status"] = to_string(s.status);
  j["extrapolated"] = s.extrapolated;
  if (!s.warning.empty()) j["warning"] = s.warning;
  return j;
}

inline int cmd_eval(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o);
  check_tol(o.tol);
  if (o.route != "closed" && o.route != "series" && o.route != "both")
    throw UsageError("--route must be closed, series or both");
  const bool want_closed = o.route != "series";
  const bool want_series = o.route != "closed";

  std::optional<ZEval> closed;
  std::optional<SeriesEval> series;
  if (want_closed) closed = t.closed(o.a);
  if (want_series) {
    series = t.series(o.a, o.tol);
    if (series->status == SeriesStatus::DomainViolation) throw DomainViolationError(series->warning);
  }
  std::optional<IdentityReport> report;
  if (closed && series) {
    const double allowed_rel = std::max(o.tol, 1e-9);
    report = compare(t.name(), closed->value, series->value, allowed_rel, "closed", "series");
    const double allowed = std::max(10.0 * series->error_estimate, allowed_rel * std::abs(closed->value));
    report->pass = series->ok() && report->abs_err <= allowed;
  }
  const Complex value = closed ? closed->value : series->value;
  const bool complex_valued = t.z.has_value();
  const bool branch = closed && closed->branch_warning;

  if (o.format == "json") {
    json j;
    j["command"] = "eval";
    j["target"] = t.name();
    j["a"] = o.a;
    if (t.z) j["z"] = {t.z->real(), t.z->imag()};
    j["route"] = o.route;
    j["value"] = number_or_null(value.real());
    if (complex_valued) j["value_im"] = number_or_null(value.imag());
    if (series) j["series"] = series_json(*series);
    if (report) {
      j["report"] = {{"lhs", number_or_null(report->lhs.real())}, {"rhs", number_or_null(report->rhs.real())},
                     {"abs_err", number_or_null(report->abs_err)}, {"rel_err", number_or_null(report->rel_err)},
                     {"result", report->pass ? "pass" : "fail"}};
    }
    if (branch) j["warning"] = "z is on the negative real axis (cube-root branch cut)";
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "target,a,z_re,z_im,route,value,value_im,series_value,series_terms,rel_err,status\n";
    out << t.name() << ',' << fmt(o.a) << ',' << (t.z ? fmt(t.z->real()) : "NA") << ','
        << (t.z ? fmt(t.z->imag()) : "NA") << ',' << o.route << ',' << fmt(value.real()) << ','
        << fmt(value.imag()) << ',' << (series ? fmt(series->value.real()) : "NA") << ','
        << (series ? std::to_string(series->terms_used) : "NA") << ',' << (report ? fmt(report->rel_err) : "NA")
        << ',' << (series ? std::string(to_string(series->status)) : "closed") << "\n";
  } else {
    out << "target " << t.name() << "\n";
    out << "a " << fmt(o.a) << "\n";
    if (t.z) out << "z " << fmt(t.z->real()) << "," << fmt(t.z->imag()) << "\n";
    out << "route " << o.route << "\n";
    out << "value " << fmt(value.real());
    if (complex_valued) out << " " << (value.imag() < 0 ? "-" : "+") << " " << fmt(std::abs(value.imag())) << "i";
    out << "\n";
    if (series) {
      out << "series_value " << fmt(series->value.real()) << "\n";
      out << "series_terms " << series->terms_used << "\n";
      out << "series_error_estimate " << fmt(series->error_estimate) << "\n";
      out << "series_status " << to_string(series->status) << "\n";
      if (!series->warning.empty()) out << "series_warning " << series->warning << "\n";
    }
    if (report)
      out << "rel_err " << fmt(report->rel_err) << "\nresult " << (report->pass ? "pass" : "fail") << "\n";
    if (branch) out << "warning z is on the negative real axis (cube-root branch cut)\n";
  }
  if (report && !report->pass) return kVerifyFailed;
  return kOk;
}

inline json check_json(const CheckRecord& c) {
  json params = json::object();
  for (const auto& [k, v] : c.params) params[k] = number_or_null(v);
  json j;
  j["name"] = c.name;
  j["params"] = params;
  if (c.lhs_exact) j["lhs"] = *c.lhs_exact;
  else j["lhs"] = number_or_null(c.lhs.real());
  if (c.rhs_exact) j["rhs"] = *c.rhs_exact;
  else j["rhs"] = number_or_null(c.rhs.real());
  j["rel_err"] = number_or_null(c.rel_err);
  j["result"] = to_string(c.result);
  j["note"] = c.note;
  return j;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  check_tol(o.tol);
  if (std::find(kSuiteNames.begin(), kSuiteNames.end(), o.suite) == kSuiteNames.end())
    throw UsageError("unknown suite '" + o.suite + "'");
  if (o.format == "csv") throw UsageError("verify writes text or json");
  const SuiteReport rep = run_suite(o.suite, VerifyConfig{o.seed, o.tol});
  if (o.format == "json") {
    json j;
    j["suite"] = rep.suite;
    j["seed"] = rep.seed;
    j["tolerance"] = rep.tolerance;
    j["checks"] = json::array();
    for (const auto& c : rep.checks) j["checks"].push_back(check_json(c));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks)
      if (c.result == CheckResult::Fail)
        out << "FAIL " << c.name << " rel_err=" << fmt(c.rel_err) << (c.note.empty() ? "" : " (" + c.note + ")")
            << "\n";
    out << "suite " << rep.suite << ": " << rep.checks.size() << " checks, " << rep.count(CheckResult::Pass)
        << " pass, " << rep.count(CheckResult::Fail) << " fail, " << rep.count(CheckResult::Skip) << " skip\n";
  }
  return rep.ok() ? kOk : kVerifyFailed;
}

inline int cmd_table(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o);
  check_tol(o.tol);
  const auto range = parse_range(o.a_range);
  if (!range) throw UsageError("--a-range must be start:end:step with start <= end and step > 0");
  if (o.format != "csv" && o.format != "text") throw UsageError("table writes csv");
  out << "a,closed_value,oracle_value,abs_err,rel_err,oracle_terms,status\n";
  for (std::size_t i = 0; i < range->count(); ++i) {
    const double a = range->at(i);
    double closed = std::numeric_limits<double>::quiet_NaN();
    std::string status;
    try {
      closed = t.closed(a).value.real();
    } catch (const PoleError&) {
      status = "pole";
    }
    const SeriesEval s = t.series(a, o.tol);
    const bool have_oracle = s.ok();
    const double oracle = have_oracle ? s.value.real() : std::numeric_limits<double>::quiet_NaN();
    const double abs_err = std::abs(closed - oracle);
    const double rel_err = abs_err / std::abs(oracle);
    if (status.empty()) status = to_string(s.status);
    out << fmt(a) << ',' << fmt(closed) << ',' << fmt(oracle) << ',' << fmt(abs_err) << ','
        << (oracle == 0.0 ? "NA" : fmt(rel_err)) << ',' << (have_oracle ? std::to_string(s.terms_used) : "NA")
        << ',' << status << "\n";
  }
  return kOk;
}

inline int cmd_oeis(const Options& o, std::ostream& out) {
  if (o.j != 0 && o.j != 1) throw UsageError("--j must be 0 or 1");
  if (o.n_max > 200) throw UsageError("--n-max must be <= 200");
  const auto seq = oeis_sequence(o.j, o.n_max);
  for (std::size_t n = 0; n < seq.size(); ++n) out << n << ' ' << seq[n].str() << "\n";
  return kOk;
}

inline void emit_error(const Options& o, std::ostream& out, std::ostream& err, std::string_view kind,
                       const std::string& message) {
  if (o.format == "json") {
    json j;
    j["error"] = kind;
    j["message"] = message;
    out << j.dump(2) << "\n";
  } else {
    err << "error (" << kind << "): " << message << "\n";
  }
}

/// Entry point; argv[0] is the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed forms and verification for 3F2(a, a+1/3, a+2/3; d, e; z)", "hyp3f2"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "series tolerance (>= 1e-14)")->capture_default_str();
    sub->add_option("--format", o.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", o.out_path, "write output to this file");
  };

  auto* eval = app.add_subcommand("eval", "evaluate one closed form or sum");
  eval->add_option("--family", o.family, "P1_A..P3_M1, G_23_43, G_53_73");
  eval->add_option("--sum", o.sum, "f30, f31 or f32");
  eval->add_option("--a", o.a, "parameter a")->required();
  eval->add_option("--z", o.z, "complex z as re,im");
  eval->add_option("--route", o.route, "closed, series or both")->capture_default_str();
  add_common(eval);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "pochhammer, binomsum, closedforms, transforms, ode or all")->required();
  verify->add_option("--seed", o.seed, "sampler seed")->capture_default_str();
  add_common(verify);

  auto* table = app.add_subcommand("table", "tabulate closed form against the series as CSV");
  table->add_option("--family", o.family, "family name");
  table->add_option("--sum", o.sum, "f30, f31 or f32");
  table->add_option("--a-range", o.a_range, "start:end:step")->required();
  table->add_option("--z", o.z, "complex z as re,im");
  add_common(table);

  auto* oeis = app.add_subcommand("oeis", "emit A057681 (j=0) or A057682 (j=1) in b-file format");
  oeis->add_option("--j", o.j, "0 or 1")->required();
  oeis->add_option("--n-max", o.n_max, "last index (<= 200)")->required();
  oeis->add_option("--out", o.out_path, "write output to this file");

  // CLI11 consumes a reversed argument list without the program name
  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error (usage): " << e.what() << "\n";
    return kUsage;
  }

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::binary);
    if (!file) {
      err << "error (usage): cannot open " << o.out_path << "\n";
      return kUsage;
    }
  }
  std::ostream& sink = o.out_path.empty() ? out : file;

  try {
    if (*eval) return cmd_eval(o, sink);
    if (*verify) return cmd_verify(o, sink);
    if (*table) return cmd_table(o, sink);
    return cmd_oeis(o, sink);
  } catch (const UsageError& e) {
    emit_error(o, sink, err, "usage", e.what());
    return kUsage;
  } catch (const InvalidCaseError& e) {
    emit_error(o, sink, err, "usage", e.what());
    return kUsage;
  } catch (const PoleError& e) {
    emit_error(o, sink, err, "pole", e.what());
    return kDomain;
  } catch (const DomainViolationError& e) {
    emit_error(o, sink, err, "domain", e.what());
    return kDomain;
  } catch (const OverflowError& e) {
    emit_error(o, sink, err, "overflow", e.what());
    return kDomain;
  } catch (const std::invalid_argument& e) {
    emit_error(o, sink, err, "usage", e.what());
    return kUsage;
  }
}

}  // namespace hyp3f2::cli
