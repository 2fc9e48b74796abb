// Serial vs OpenMP cofactor kernels on the numeric blocks of the entry matrices.
// Usage: bench_kernels [max_weight=6] [repeats=3]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "macdet/macdonald.hpp"

using namespace macdet;

namespace {

template <class Fn>
double best_of(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int max_weight = argc > 1 ? std::atoi(argv[1]) : 6;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%-14s %-10s %5s %12s %12s %8s\n", "lambda", "matrix", "size", "serial_s", "parallel_s", "speedup");
  double total_serial = 0;
  double total_parallel = 0;
  for (int w = 2; w <= max_weight; ++w)
    for (const auto& l : partitions_of(w)) {
      for (const auto& [label, m] : {std::pair{"schur-mod", entry_matrix(l)}, std::pair{"monomial", monomial_entry_matrix(l)}}) {
        if (m.rows.size() < 2) continue;
        std::vector<QtPoly> a, b;
        const double ts = best_of(repeats, [&] { a = symbol_row_cofactors(m.entries, Kernel::serial); });
        const double tp = best_of(repeats, [&] { b = symbol_row_cofactors(m.entries, Kernel::parallel); });
        if (a != b) {
          std::fprintf(stderr, "kernel mismatch at (%s)\n", l.to_string().c_str());
          return 1;
        }
        total_serial += ts;
        total_parallel += tp;
        std::printf("%-14s %-10s %5zu %12.6f %12.6f %8.2f\n", ("(" + l.to_string() + ")").c_str(), label, m.rows.size(),
                    ts, tp, ts / tp);
      }
    }
  std::printf("total serial %.4f s, parallel %.4f s, speedup %.2f\n", total_serial, total_parallel,
              total_serial / total_parallel);
  return 0;
}
