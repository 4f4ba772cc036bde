#pragma once

#include <cstddef>
#include <functional>

namespace flagcalc {

/// Worker cap: FLAGCALC_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
unsigned worker_count();

/// Calls body(i) for every i in [0, n) on up to worker_count() threads.
/// Work is split into contiguous chunks; callers write results into
/// per-index slots, which keeps output independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace flagcalc
