// Tabulate two-index norms of an indicator against the closed law and show
// the maximal combination of a Haar multiple.
#include <cstdio>

#include "dyadic.hpp"

using namespace dyadic;

int main() {
  const StepFunction chi = indicator_of(DyadicInterval(2, 1), 0, 5);
  const double mu = chi.integral();
  std::printf("indicator of measure %g\n   p     q      norm       law\n", mu);
  for (double p : {0.5, 1.0, 2.0, 4.0})
    for (double q : {1.0, 2.0, kInf}) {
      const double n = lorentz_norm(chi, LorentzIndex(p, q));
      const double law = indicator_lorentz_norm(LorentzIndex(p, q), mu);
      std::printf("%4g  %4g  %9.6f %9.6f\n", p, q, n, law);
    }

  CoeffMatrix a;
  for (int k = 0; k < 4; ++k) a.set(k, 0, 1.0);
  const StepFunction h = haar(DyadicInterval(1, 0), 0, 5);
  const StepFunction s = maximal_s(h, a);
  std::printf("maximal combination of a Haar function: sup = %.6f, zero outside support: %s\n",
              lp_norm(s, kInf),
              zero_locality_check(h, a, DyadicInterval(1, 0)).pass ? "yes" : "no");
  return 0;
}
