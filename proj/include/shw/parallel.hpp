// Minimal fork-join helper for embarrassingly parallel loops.  The worker
// count comes from the SHW_THREADS environment variable; 0 or an unset value
// falls back to the hardware concurrency.
#pragma once

#include <cstddef>
#include <functional>

namespace shw {

unsigned worker_count();

// Invokes body(i) for every i in [0, count), possibly from multiple threads.
// The first exception thrown by any invocation is rethrown on the caller once
// all workers have finished.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace shw
