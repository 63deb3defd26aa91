#pragma once

#include <functional>

namespace vortex {

/// Worker count used by the grid-level hot loops. 0 selects hardware parallelism.
void set_thread_count(int count);
int thread_count();

/// Runs fn(begin..end) split into contiguous chunks, one per worker.
/// fn(first, last, worker) must only write state owned by its own index range,
/// so results do not depend on the worker count.
void parallel_for(int begin, int end,
                  const std::function<void(int first, int last, int worker)>& fn);

}  // namespace vortex
