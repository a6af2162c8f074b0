#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace specdiss {

inline int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw > 8 ? 8 : hw);
}

// Splits [0, total) into one contiguous chunk per worker. fn(worker, lo, hi)
// must only touch worker-local state; the caller merges.
inline void parallel_chunks(std::uint64_t total,
                            const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
    int workers = worker_count();
    if (total < 1024 || workers == 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = w * chunk;
        std::uint64_t hi = lo + chunk < total ? lo + chunk : total;
        if (lo >= hi) break;
        threads.emplace_back(fn, w, lo, hi);
    }
    for (auto& t : threads) t.join();
}

}  // namespace specdiss
