#pragma once

#include <cstddef>
#include <functional>

namespace qgame {

/// Worker count: QGAME_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls fn(i) for i in [0, n) across thread_count() workers. Iterations must
/// write disjoint state. The first exception thrown by any iteration is
/// rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qgame
