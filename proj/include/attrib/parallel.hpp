#pragma once

#include <cstddef>
#include <functional>

namespace attrib {

// Resolves a --threads request: 0 means all hardware threads.
unsigned effective_threads(unsigned requested);

// Runs body(i) for i in [0, n) across `threads` workers. Each index is
// processed exactly once; callers obtain deterministic results by writing
// to per-index slots. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace attrib
