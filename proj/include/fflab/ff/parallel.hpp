#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace fflab {

int worker_count();
void set_worker_count(int n);

// Static chunking; body(i) must only write to slots owned by i.
template <class Body>
void parallel_for(std::uint64_t n, Body&& body) {
    int w = std::min<std::uint64_t>(worker_count(), n);
    if (w <= 1 || n < 64) {
        for (std::uint64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = (n + w - 1) / w;
    for (int t = 0; t < w; ++t) {
        std::uint64_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] {
            for (std::uint64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace fflab
