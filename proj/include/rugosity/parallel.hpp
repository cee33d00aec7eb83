#pragma once

#include <cstddef>
#include <functional>

namespace rugosity::par {

/// Worker cap taken from RUGOSITY_THREADS, falling back to the hardware
/// concurrency. Always at least 1.
int max_threads();

/// Runs fn(begin, end) over [0, n) split into fixed-size blocks. Blocks
/// may execute on any thread in any order, so fn must only write to
/// locations derived from its own index range; with that discipline the
/// result is identical for every thread count.
void for_blocks(std::size_t n, std::size_t block_size,
                const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace rugosity::par
