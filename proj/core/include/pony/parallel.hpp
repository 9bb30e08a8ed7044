#pragma once

#include <cstddef>
#include <functional>

namespace pony {

/// Worker count: PONY_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n). Each index is handled exactly once; callers
/// write results into per-index slots so the outcome does not depend on the
/// number of workers. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pony
