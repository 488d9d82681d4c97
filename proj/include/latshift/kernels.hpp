#pragma once

#include <cstdint>
#include <vector>

namespace latshift {

/// Execution policy for the data-parallel kernels. Serial is the reference
/// implementation; both produce identical results.
enum class Exec { Serial, Parallel };

namespace kernels {

/// out[t] = fn(t) for t in [0, count). Each slot is written by exactly one
/// iteration, so the result does not depend on scheduling.
template <class T, class Fn>
std::vector<T> map_indices(std::int64_t count, Fn&& fn, Exec exec) {
  std::vector<T> out(static_cast<std::size_t>(count > 0 ? count : 0));
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t t = 0; t < count; ++t) out[static_cast<std::size_t>(t)] = fn(t);
  } else {
    for (std::int64_t t = 0; t < count; ++t) out[static_cast<std::size_t>(t)] = fn(t);
  }
  return out;
}

/// Number of OpenMP threads a parallel region would use.
int max_threads();

}  // namespace kernels
}  // namespace latshift
