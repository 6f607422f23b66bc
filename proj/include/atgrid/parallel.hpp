#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace atgrid {

// Worker count used when a caller passes threads == 0.
inline int default_thread_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 16u));
}

/**
 * Splits [0, n) into one contiguous chunk per worker, runs
 * body(begin, end, local) on each, then merges the locals into acc in
 * worker-index order. All engines built on this produce bit-identical
 * results for every thread count because their merges are exact integer
 * sums (order-independent). The first worker exception is rethrown on the
 * calling thread.
 */
template <class Local, class Body, class Merge>
void parallel_chunks(std::size_t n, int threads, Local& acc, Body body, Merge merge) {
    if (threads <= 0) threads = default_thread_count();
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(n, 1));
    if (workers <= 1) {
        body(0, n, acc);
        return;
    }
    std::vector<Local> locals(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        pool.emplace_back([&, w, begin, end] {
            try {
                body(begin, end, locals[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    for (std::size_t w = 0; w < workers; ++w) merge(acc, locals[w]);
}

}  // namespace atgrid
