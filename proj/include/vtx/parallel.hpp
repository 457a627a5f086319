#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace vtx {

// Worker count: VERTEX_THREADS if set (clamped to [1,64]), else hardware
// concurrency capped at 8.
inline int thread_budget() {
    if (const char* env = std::getenv("VERTEX_THREADS")) {
        int v = std::atoi(env);
        if (v < 1) v = 1;
        if (v > 64) v = 64;
        return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(hw > 8 ? 8 : hw);
}

// Runs f(i) for i in [0, n). Results must be written to per-index slots by
// the caller; the schedule carries no information.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    int workers = thread_budget();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < n;
                 i += static_cast<std::size_t>(workers))
                f(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace vtx
