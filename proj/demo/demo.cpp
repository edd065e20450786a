// Evaluates a few closed forms next to the series they sum.

#include "hyp3f2/hyp3f2.hpp"

#include <cstdio>

int main() {
  using namespace hyp3f2;

  for (FamilyId f : {FamilyId::P1_A, FamilyId::P4_B, FamilyId::P3_1}) {
    const double a = -0.75;
    const double closed = eval_family(f, a);
    const SeriesEval s = eval_series(family_params(f, a), 1e-12);
    std::printf("%-6s a=%g  closed=%.15g  series=%.15g  (%llu terms, %s)\n", std::string(to_string(f)).c_str(), a,
                closed, s.value.real(), static_cast<unsigned long long>(s.terms_used), std::string(to_string(s.status)).c_str());
  }

  const ZEval g = eval_G_23_43(0.4, Complex(0.5));
  std::printf("G_23_43(0.4, 0.5) = %.15g\n", g.value.real());

  for (unsigned n = 0; n <= 10; ++n) std::printf("%s ", f3j_exact(BinomSumId::F30, n).str().c_str());
  std::printf("\n");

  const IdentityReport r = check_transformation(Transformation::DMinusC, {{-0.19, 0.17, 0.42}, {0.78, 0.65}, 1.0});
  std::printf("d-minus-c: rel_err=%.3g %s\n", r.rel_err, r.skipped ? "skipped" : (r.pass ? "pass" : "fail"));
}
