#pragma once

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace v1ss {

/// Worker count for the degree-parallel kernels. workers <= 0 picks the
/// OpenMP default.
struct ExecPolicy {
  int workers = 1;

  int resolved() const {
#ifdef _OPENMP
    return workers > 0 ? workers : omp_get_max_threads();
#else
    return 1;
#endif
  }
};

/// out[i] = fn(items[i]); runs items in parallel, rethrows the first
/// exception after all workers finish. Output order matches input order.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& items, const ExecPolicy& policy, Fn&& fn)
    -> std::vector<decltype(fn(items[0]))> {
  using Out = decltype(fn(items[0]));
  std::vector<Out> out(items.size());
  std::exception_ptr error;
  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(policy.resolved())
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = fn(items[i]);
    } catch (...) {
#pragma omp critical(v1ss_parallel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// Serial reference for parallel_map.
template <typename In, typename Fn>
auto serial_map(const std::vector<In>& items, Fn&& fn) -> std::vector<decltype(fn(items[0]))> {
  std::vector<decltype(fn(items[0]))> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(fn(item));
  return out;
}

}  // namespace v1ss
