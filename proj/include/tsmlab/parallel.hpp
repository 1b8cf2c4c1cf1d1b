#ifndef TSMLAB_PARALLEL_HPP
#define TSMLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace tsmlab {

/// Worker count: the limit from set_worker_limit if nonzero, else
/// TSMLAB_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();
void set_worker_limit(unsigned n);

/// Runs body(i) for i in [0, n). Each index writes only its own output slot, so
/// results do not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace tsmlab

#endif
