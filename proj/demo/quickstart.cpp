// Computes L_n for a = 1/2, b = 3 three ways and runs the identity suite on
// a small grid.

#include <iostream>

#include "biperiodic/biperiodic.hpp"

int main() {
  using namespace biperiodic;

  const SeqParams p(Rational(1, 2), Rational(3));
  for (long n = 0; n <= 6; ++n) {
    const RatMat rec = lucas_matrix_rec(p, n);
    const RatMat closed = lucas_matrix_closed(p, n);
    const RatMat binet = lucas_matrix_binet(p, n);
    std::cout << "L[" << n << "] = " << rec << (rec == closed && closed == binet ? "  (all routes agree)" : "  MISMATCH")
              << '\n';
  }

  const SuiteReport report = run_full_suite({p, SeqParams(Rational(1), Rational(1))}, {.max_index = 6});
  std::cout << report.checks_run << " checks, " << report.failures.size() << " failures, "
            << report.expected_failures.size() << " known misstatements\n";
  return report.ok() ? 0 : 1;
}
