#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace wellscmp {

unsigned jobs();
void set_jobs(unsigned n);  // 0 restores the hardware default

/// Runs fn(block) for block = 0..blocks-1 on up to jobs() worker threads.
/// Block set is independent of thread count, so callers that merge results
/// in block order get the same answer at any parallelism. Nested calls run
/// serially.
void parallel_blocks(size_t blocks, const std::function<void(size_t)>& fn);

}  // namespace wellscmp
