#ifndef TORIC_PARALLEL_HPP
#define TORIC_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace toric {

// Static-chunked parallel loop. Work item i only ever writes to slot i of
// whatever the caller preallocated, so results are identical for any thread
// count; reductions happen sequentially afterwards.
template <typename Fn>
void parallel_for(size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    size_t nt = std::min<size_t>(threads, n);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nt);
    for (size_t t = 0; t < nt; ++t) {
        size_t lo = n * t / nt, hi = n * (t + 1) / nt;
        pool.emplace_back([&, lo, hi, t] {
            try {
                for (size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace toric

#endif
