#pragma once

#include <omp.h>

#include <cstddef>
#include <exception>
#include <mutex>

namespace cluster {

/// Number of OpenMP threads used by the parallel kernels. 0 restores the
/// runtime default (all cores).
void set_thread_count(int n);
int thread_count();

/// Runs f(i) for i in [0, n). Iterations are independent; results must be
/// written to per-index slots by the caller. If any iteration throws, the
/// exception of the smallest failing index is rethrown after the loop.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  std::exception_ptr error;
  std::size_t error_index = n;
  std::mutex m;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(m);
      if (static_cast<std::size_t>(i) < error_index) {
        error_index = static_cast<std::size_t>(i);
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

template <class F>
void serial_for(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace cluster
