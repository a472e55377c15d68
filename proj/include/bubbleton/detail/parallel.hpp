#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include "bubbleton/execution.hpp"

namespace bubbleton::detail {

/// Runs body(i) for i in [0, n). Exceptions thrown inside the OpenMP region
/// are captured and the first one is rethrown on the calling thread.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bubbleton::detail
