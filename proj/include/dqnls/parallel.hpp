#pragma once

#include <cstddef>
#include <functional>

namespace dqnls {

// Bounded worker pool size: DQNLS_WORKERS if set, else hardware concurrency.
std::size_t worker_count();

// Runs fn(i) for i in [0, count) on up to worker_count() threads. Used for the
// embarrassingly parallel time-sample sweeps; fn must be thread-safe.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace dqnls
