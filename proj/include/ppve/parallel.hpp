#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// OpenMP-backed loops with deterministic results: parallel callers write to
// caller-owned per-index storage, and reductions accumulate fixed-size blocks
// that are combined in block order.  Outputs are therefore independent of the
// thread count.  Each kernel has a serial reference twin used by the tests
// and the benchmark.

namespace ppve::par {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

template <class F>
void for_each(std::int64_t n, F&& body) {
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

template <class F>
void for_each_serial(std::int64_t n, F&& body) {
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

// Sum of term(i) for i in [0, n).  Partial sums are taken over contiguous
// blocks of fixed size and added in block order.
template <class T, class F>
T blocked_sum(std::int64_t n, T zero, F&& term, std::int64_t block = 8192) {
  const std::int64_t nblocks = (n + block - 1) / block;
  std::vector<T> partial(static_cast<std::size_t>(nblocks), zero);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    T acc = zero;
    const std::int64_t end = std::min(n, (b + 1) * block);
    for (std::int64_t i = b * block; i < end; ++i) acc += term(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  T total = zero;
  for (const T& p : partial) total += p;
  return total;
}

template <class T, class F>
T blocked_sum_serial(std::int64_t n, T zero, F&& term, std::int64_t block = 8192) {
  const std::int64_t nblocks = (n + block - 1) / block;
  T total = zero;
  for (std::int64_t b = 0; b < nblocks; ++b) {
    T acc = zero;
    const std::int64_t end = std::min(n, (b + 1) * block);
    for (std::int64_t i = b * block; i < end; ++i) acc += term(i);
    total += acc;
  }
  return total;
}

// Maximum of term(i); order-independent, so a plain parallel reduction.
template <class F>
double max_value(std::int64_t n, F&& term) {
  double best = -std::numeric_limits<double>::infinity();
#pragma omp parallel
  {
    double local = -std::numeric_limits<double>::infinity();
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) local = std::max(local, term(i));
#pragma omp critical
    best = std::max(best, local);
  }
  return best;
}

}  // namespace ppve::par
