// Compares the serial reference kernels against the OpenMP ones on the three
// hot paths: polynomial products, the diagonal shift (substitution), and the
// bounded-operator candidate scan.  On a single-core host the two columns
// coincide; the point is to expose regressions in either path.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fsplit/diagonal_section.hpp"
#include "fsplit/polynomial.hpp"
#include "fsplit/splitting.hpp"

using namespace fsplit;
using algebra::Polynomial;

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_num_procs();
#else
  return 1;
#endif
}

double time_of(const std::function<void()>& body, int reps) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    const double t0 = now_seconds();
    body();
    best = std::min(best, now_seconds() - t0);
  }
  return best;
}

void row(const char* name, const std::function<void()>& serial,
         const std::function<void()>& parallel, int reps) {
  set_threads(1);
  const double ts = time_of(serial, reps);
  set_threads(max_threads());
  const double tp = time_of(parallel, reps);
  std::printf("%-34s %9.3f s %9.3f s %7.2fx\n", name, ts, tp, ts / tp);
  std::fflush(stdout);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", max_threads());
  std::printf("%-34s %11s %11s %8s\n", "kernel", "serial", "parallel", "speedup");

  const Polynomial f43 = diag::f_section(4, 3);
  const Polynomial f52 = diag::f_section(5, 2);
  const auto pairing4 = splitting::chart_pairing(4);
  const auto pairing5 = splitting::chart_pairing(5);

  row("product f(4,3) * f(4,3)",
      [&] { (void)algebra::mul_serial(f43, f43); }, [&] { (void)(f43 * f43); }, 3);

  const Polynomial sq = f43 * f43;
  row("product f(4,3)^2 * f(4,3)",
      [&] { (void)algebra::mul_serial(sq, f43); }, [&] { (void)(sq * f43); }, 3);

  // The diagonal shift and candidate scan pick serial vs parallel from the
  // active OpenMP thread count, so the same call serves as both columns.
  row("diagonal shift order, f(4,3)^2",
      [&] { (void)splitting::vanishing_order_on_diagonal(sq, pairing4); },
      [&] { (void)splitting::vanishing_order_on_diagonal(sq, pairing4); }, 3);

  row("diagonal shift order, f(5,2)",
      [&] { (void)splitting::vanishing_order_on_diagonal(f52, pairing5); },
      [&] { (void)splitting::vanishing_order_on_diagonal(f52, pairing5); }, 1);

  const splitting::SplittingOperator op43(sq);
  row("bounded operator scan, n=4, p=3",
      [&] { (void)splitting::maximality_operator_check(op43, pairing4, 2); },
      [&] { (void)splitting::maximality_operator_check(op43, pairing4, 2); }, 3);

  return 0;
}
