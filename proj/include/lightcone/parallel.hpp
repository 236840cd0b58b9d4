#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace lightcone {

/// How a grid-level kernel distributes its independent evaluations.
/// `serial` is the plain reference loop; `parallel` runs the same body under
/// OpenMP. Both produce bit-identical results since every slot is computed
/// independently and reductions happen afterwards in index order.
enum class Execution { serial, parallel };

/// Number of OpenMP workers used by `Execution::parallel` (0 = runtime default).
void set_worker_count(int workers);
int worker_count();

/// Calls body(i) for i in [0, n). Exceptions thrown inside the parallel region
/// are captured and the first one is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace lightcone
