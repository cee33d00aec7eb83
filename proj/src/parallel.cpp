#include "rugosity/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace rugosity::par {

int max_threads() {
    if (const char* env = std::getenv("RUGOSITY_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            return static_cast<int>(v > 256 ? 256 : v);
        }
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void for_blocks(std::size_t n, std::size_t block_size,
                const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (block_size == 0) block_size = 1;
    const std::size_t blocks = (n + block_size - 1) / block_size;
    const int threads = max_threads();
    if (threads <= 1 || blocks <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) {
            const std::size_t lo = b * block_size;
            const std::size_t hi = lo + block_size < n ? lo + block_size : n;
            fn(lo, hi);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= blocks) return;
            const std::size_t lo = b * block_size;
            const std::size_t hi = lo + block_size < n ? lo + block_size : n;
            fn(lo, hi);
        }
    };
    const std::size_t nworkers =
        static_cast<std::size_t>(threads) < blocks ? static_cast<std::size_t>(threads) : blocks;
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (std::size_t t = 0; t < nworkers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace rugosity::par
