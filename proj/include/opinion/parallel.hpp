#pragma once

#include <cstddef>
#include <functional>

namespace opinion {

/// Worker count for a batch of `task_count` independent tasks: hardware
/// concurrency, capped by OPINIOND_THREADS when set.
std::size_t worker_count(std::size_t task_count);

/// Runs fn(i) for every i in [0, n) across worker threads. fn must confine
/// writes to per-index slots; reductions happen after the join, so results
/// are independent of scheduling order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace opinion
