#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace pauli_simplex::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

/// Calls body(k) for k in [0, count), striped over up to `threads` workers.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(resolve_threads(threads), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < count; k += workers) body(k);
    });
  }
}

}  // namespace pauli_simplex::detail
