#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace devrank::detail {

// Runs fn(i) for i in [0, n). With threads > 1 the range is split into
// contiguous chunks, one per worker; every fn(i) writes only slot i, so the
// result is identical for any worker count. grain is the smallest n worth
// spawning threads for.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn, std::size_t grain = 4096) {
    if (threads <= 1 || n < grain) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const auto workers = static_cast<std::size_t>(threads);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = begin + chunk < n ? begin + chunk : n;
        if (begin >= end) break;
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace devrank::detail
