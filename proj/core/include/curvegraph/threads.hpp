#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace curvegraph {

// Worker count: hardware concurrency capped by the CURVEGRAPH_THREADS env var.
inline unsigned thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* s = std::getenv("CURVEGRAPH_THREADS")) {
        long v = std::strtol(s, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

// Runs fn(block) for block = 0..n_blocks-1 on a small pool. Results must be
// written to per-block slots by the caller; the block decomposition is fixed,
// so any later reduction is deterministic regardless of thread count.
inline void parallel_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& fn) {
    unsigned workers = thread_count();
    if (workers <= 1 || n_blocks <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            fn(b);
        }
    };
    unsigned n = std::min<std::size_t>(workers, n_blocks);
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace curvegraph
