#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace nbn::util {

/// Runs fn(worker, begin, end) on `threads` workers over disjoint contiguous
/// chunks of [0, n). Deterministic partition: chunk w covers
/// [w*n/threads, (w+1)*n/threads). With threads <= 1 runs inline.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads <= 1 || n == 0) {
        fn(0u, std::size_t{0}, n);
        return;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t b = n * w / threads;
        const std::size_t e = n * (w + 1) / threads;
        pool.emplace_back([&fn, w, b, e] { fn(w, b, e); });
    }
    for (auto& t : pool) t.join();
}

} // namespace nbn::util
