#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tamecalc {

// Worker cap: hardware concurrency, clamped by the TAMECALC_THREADS
// environment variable when set.
inline int max_threads() {
    static const int cached = [] {
        int n = static_cast<int>(std::thread::hardware_concurrency());
        if (n < 1) n = 1;
        if (const char* env = std::getenv("TAMECALC_THREADS")) {
            const int cap = std::atoi(env);
            if (cap >= 1 && cap < n) n = cap;
        }
        return n;
    }();
    return cached;
}

// Runs fn(i) for i in [0, n). Every element must be computed independently of
// the others, so results do not depend on the partitioning.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(max_threads()), n / 4096 + 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 1; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (std::size_t i = 0; i < std::min(chunk, n); ++i) fn(i);
    for (auto& t : pool) t.join();
}

}  // namespace tamecalc
