#pragma once

#include <cstdint>
#include <functional>

namespace partlab {

/// Resolves a requested worker count: 0 means hardware concurrency.
unsigned effective_workers(unsigned requested);

/// Runs body(begin, end) over contiguous chunks of [0, count), one chunk per
/// worker thread. The first exception thrown by any worker is rethrown.
void parallel_for(std::uint64_t count, unsigned workers,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body);

}  // namespace partlab
