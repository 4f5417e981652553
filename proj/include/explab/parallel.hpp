#pragma once

#include <cstddef>
#include <functional>

namespace explab {

/// Worker count from the EXPLAB_WORKERS environment variable, else the
/// hardware concurrency (at least 1).
int default_worker_count();

/// Runs fn(i) for i in [0, count) on `workers` threads. Tasks are claimed
/// dynamically; callers must write results into per-index slots so the
/// outcome does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace explab
