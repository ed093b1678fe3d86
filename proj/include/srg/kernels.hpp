#pragma once

// Data-parallel inner loops. Every kernel has a serial reference path and an
// OpenMP path selected by Execution; tests assert that both agree bit for bit.

#include <cstddef>
#include <exception>
#include <mutex>
#include <span>

#include "srg/exact_linalg.hpp"
#include "srg/sparse_vector.hpp"

namespace srg {
class SRGraph;
}

namespace srg::kernels {

/// One Bareiss step below `pivot_row`:
///   m[i][j] = (p * m[i][j] - m[i][c] * m[pivot_row][j]) / prev   for j > c,
/// and m[i][c] = 0, for every row i > pivot_row, where p = m[pivot_row][c].
void bareiss_update(IntMatrix& m, std::size_t pivot_row, std::size_t pivot_col, const BigInt& prev,
                    Execution exec);

/// out[u] = sum over neighbours w of u of in[w]. Throws OverflowError if a
/// row sum leaves the 64-bit range.
void adjacency_gather(const SRGraph& g, std::span<const Coeff> in, std::span<Coeff> out,
                      Execution exec);

/// Number of OpenMP threads a parallel region would use.
int max_threads();

/// Calls body(i) for i in [0, count). Iterations must be independent and
/// write only to their own slot. The first exception thrown is rethrown
/// after the loop.
template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace srg::kernels
