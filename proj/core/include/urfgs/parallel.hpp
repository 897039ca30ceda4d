#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace urfgs {

/// Runs fn(i) for i in [0, count). Work is split into contiguous blocks so
/// that results written to disjoint slots land exactly as in the serial run.
/// threads <= 1 runs inline.
inline void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
    if (count == 0) return;
    int n = std::max(1, threads);
    n = static_cast<int>(std::min<size_t>(n, count));
    if (n == 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    size_t block = (count + n - 1) / n;
    for (int t = 0; t < n; ++t) {
        size_t begin = t * block;
        size_t end = std::min(count, begin + block);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] {
            for (size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace urfgs
