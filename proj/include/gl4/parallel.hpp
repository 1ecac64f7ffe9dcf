#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace gl4 {

inline int default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Runs body(i) for i in [0, n) across nthreads workers.  Work is handed out
// in chunks through a shared counter, so uneven items balance out.
template <class Body>
void parallel_for(size_t n, const Body& body, int nthreads = 0) {
    if (nthreads <= 0) nthreads = default_threads();
    if (nthreads == 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    size_t chunk = std::max<size_t>(1, n / (static_cast<size_t>(nthreads) * 8));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                size_t lo = next.fetch_add(chunk);
                if (lo >= n) return;
                size_t hi = std::min(n, lo + chunk);
                for (size_t i = lo; i < hi; ++i) body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace gl4
