// Timing comparison of the OpenMP kernels against their serial reference
// implementations, on representative workloads. Results must agree exactly;
// only the wall time differs.

#include <omp.h>

#include <iomanip>
#include <iostream>

#include "rho/verify.hpp"

using namespace rho;

namespace {

template <typename F>
double timed(F&& f) {
  double t0 = omp_get_wtime();
  f();
  return (omp_get_wtime() - t0) * 1e3;
}

void report(const std::string& name, double serial_ms, double parallel_ms,
            bool equal) {
  std::cout << std::left << std::setw(34) << name << std::right
            << std::setw(10) << std::fixed << std::setprecision(1)
            << serial_ms << " ms" << std::setw(10) << parallel_ms << " ms"
            << std::setw(9) << std::setprecision(2)
            << serial_ms / parallel_ms << "x"
            << (equal ? "" : "   MISMATCH") << "\n";
}

}  // namespace

int main() {
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right
            << std::setw(13) << "serial" << std::setw(13) << "openmp"
            << std::setw(10) << "speedup" << "\n";

  {
    BCDParams p{Family::C, 6, weight_of_ints({1, 1, 0, 0, 0, 0})};
    PolyMatrix m = build_matrix(BigMatrixKind::M, p);
    LaurentPoly a, b;
    double ts = timed([&] { a = determinant_serial(m); });
    double tp = timed([&] { b = determinant(m); });
    report("determinant M (C, m=6)", ts, tp, a == b);
  }
  {
    TypeAParams p{5, 1, {3, 2, 1, 1, 0, 0}};
    PolyMatrix m = build_matrix(BigMatrixKind::A, p);
    LaurentPoly a, b;
    double ts = timed([&] { a = determinant_serial(m); });
    double tp = timed([&] { b = determinant(m); });
    report("determinant A (5+1)", ts, tp, a == b);
  }
  {
    BCDParams p{Family::C, 5, weight_of_ints({2, 1, 1, 0, 0})};
    LaurentPoly a, b;
    double ts = timed([&] { a = graded_character_serial(p); });
    double tp = timed([&] { b = graded_character(p); });
    report("graded character (C, m=5)", ts, tp, a == b);
  }
  {
    BCDParams p{Family::D, 5, WeightVec(5, HalfInt(3))};
    LaurentPoly a, b;
    double ts = timed([&] { a = graded_character_serial(p); });
    double tp = timed([&] { b = graded_character(p); });
    report("graded character (D spin, m=5)", ts, tp, a == b);
  }
  {
    TypeAParams p{4, 2, {2, 1, 1, 0, 0, 0}};
    LaurentPoly a, b;
    double ts = timed([&] { a = graded_character_serial(p); });
    double tp = timed([&] { b = graded_character(p); });
    report("graded character (A, 4+2)", ts, tp, a == b);
  }
  return 0;
}
