#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace kappa3 {

// Runs fn(i) for i in [0, count). Results must go into per-index slots so
// the outcome is independent of scheduling. threads <= 0 uses all cores.
template <class F>
void parallel_for(std::size_t count, int threads, F fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace kappa3
