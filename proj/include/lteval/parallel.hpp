#pragma once

#include <cstddef>
#include <functional>

namespace lteval {

/// Runs body(0..count-1) on up to `jobs` worker threads. Results must be
/// written to per-index slots; the schedule carries no ordering guarantees.
/// The first exception thrown by any body is rethrown on the caller.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

} // namespace lteval
