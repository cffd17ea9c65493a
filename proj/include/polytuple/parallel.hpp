#ifndef POLYTUPLE_PARALLEL_HPP
#define POLYTUPLE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace polytuple {

// Worker cap from POLYTUPLE_THREADS (0 or unset means hardware concurrency).
unsigned worker_count();

// Runs fn(begin, end) over disjoint chunks of [begin, end), possibly on several
// threads. Chunk boundaries depend only on the range and worker count, so callers
// that write to preallocated slots get deterministic results.
void parallel_chunks(size_t begin, size_t end,
                     const std::function<void(size_t, size_t)>& fn);

}  // namespace polytuple

#endif
