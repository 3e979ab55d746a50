#ifndef AQPATH_PARALLEL_HPP
#define AQPATH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace aqpath {

/// Worker count from AQPATH_JOBS, else the hardware thread count (>= 1).
int default_jobs();

/// Calls body(i) for every i in [0, count) on up to `jobs` threads. Work is
/// handed out by index, so callers that write result[i] get a schedule-free
/// outcome. The first exception thrown by a worker is rethrown here.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body);

}  // namespace aqpath

#endif  // AQPATH_PARALLEL_HPP
