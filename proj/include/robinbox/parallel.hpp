#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace robinbox {

enum class Exec { serial, parallel };

// out[i] = f(i) for i in [0, n). The serial path is the reference; the
// parallel path uses a static OpenMP schedule and must give identical
// results for any pure f. The first exception thrown by any f(i) is
// rethrown on the calling thread once the loop has finished.
template <class F>
auto map_indexed(Exec exec, std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::exception_ptr failure;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(robinbox_map_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

// Number of threads the parallel path would use.
int max_threads();

}  // namespace robinbox
