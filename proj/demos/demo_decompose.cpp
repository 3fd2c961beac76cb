// Draw a sparse spiky function, decompose it at twice its mean height,
// and print the verification lines for the result.
#include <cstdio>

#include "dyadic.hpp"

using namespace dyadic;

int main() {
  const StepFunction f = random_spikes(7, 0, 8, 4, 5);
  const double mean = lp_norm(f, 1.0) / f.domain_measure();
  const CZDecomposition dec = cz_decompose(f, 2.0 * mean);

  std::printf("input: %zu cells, ||f||_1 = %.6g, mean |f| = %.6g\n", f.cell_count(),
              lp_norm(f, 1.0), mean);
  std::printf("height %.6g selected %zu cubes\n", dec.height, dec.bad.size());
  for (const auto& [Q, b] : dec.bad)
    std::printf("  cube [%g, %g): ||b||_1 = %.6g\n", Q.left(), Q.right(), lp_norm(b, 1.0));

  const VerificationReport v = verify_cz(f, dec);
  const VerificationReport s = cz_structure_check(f, dec);
  std::printf("inequalities: %s\nstructure:    %s\n", v.pass ? "pass" : "FAIL",
              s.pass ? "pass" : "FAIL");
  std::printf("%s\n", to_json(v).dump(2).c_str());
  return v.pass && s.pass ? 0 : 1;
}
