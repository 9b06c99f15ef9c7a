#ifndef VEMSUPG_PARALLEL_HPP
#define VEMSUPG_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace vemsupg {

/// Worker cap: explicit override > VEMSUPG_THREADS env > hardware concurrency.
int thread_cap();

/// Override the worker cap for this process (0 restores the default probing).
void set_thread_cap(int n);

/// Run fn(i) for i in [0, n). Work is split into contiguous chunks and every
/// result must be written to a preallocated, index-owned slot, which keeps the
/// outcome identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace vemsupg

#endif
