#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

// Deterministic block scheduling. Workers pull block indices from a shared
// counter and write into per-block slots, so the reduction order (and hence
// every bit of the result) is independent of the worker count.

namespace fdd2d {

inline constexpr std::uint64_t kTrialBlock = 4096;

inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(block_index) for block_index in [0, n_blocks) on `workers` threads.
// fn must only touch state owned by its block index.
template <class Fn>
void for_each_block(std::uint64_t n_blocks, unsigned workers, Fn&& fn) {
    workers = resolve_workers(workers);
    if (workers <= 1 || n_blocks <= 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b)
            fn(b);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= n_blocks)
                return;
            fn(b);
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_blocks));
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
}

} // namespace fdd2d
