#pragma once

// Index-parallel loops. Callers write results into per-index slots and reduce
// them in index order afterwards, so results do not depend on the worker count.

#include <cstddef>
#include <functional>

namespace qslab {

/// QSLAB_THREADS if set to a positive integer, else hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs fn(0) ... fn(n-1) on up to worker_count() threads. The first exception
/// (lowest index among failing chunks) is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qslab
