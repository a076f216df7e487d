#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace mhf {

// Worker count: MHFORGE_THREADS if set, else hardware concurrency.
std::size_t thread_count();
void set_thread_count(std::size_t n);  // 0 restores the default

// Runs fails(i) for i in [0, n) and returns the smallest i for which it
// returned true.  Work is split into blocks; a block is skipped once a
// smaller failure is known, so the answer is the same for any thread count.
template <class Fn>
std::optional<std::uint64_t> first_failure(std::uint64_t n, Fn&& fails) {
    const std::size_t threads = std::min<std::uint64_t>(thread_count(), std::max<std::uint64_t>(n / 64, 1));
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < n; ++i)
            if (fails(i)) return i;
        return std::nullopt;
    }
    constexpr std::uint64_t block = 256;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{n};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        try {
            for (;;) {
                std::uint64_t start = next.fetch_add(block);
                if (start >= n || start >= best.load()) return;
                std::uint64_t stop = std::min(n, start + block);
                for (std::uint64_t i = start; i < stop; ++i) {
                    if (i >= best.load()) return;
                    if (fails(i)) {
                        std::uint64_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                        return;
                    }
                }
            }
        } catch (...) {
            std::lock_guard lk(err_mu);
            if (!err) err = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    if (best.load() < n) return best.load();
    return std::nullopt;
}

// Evaluates fn(i) for i in [0, n) into a vector, in parallel.
template <class T, class Fn>
std::vector<T> parallel_map(std::uint64_t n, Fn&& fn) {
    std::vector<T> out(n);
    first_failure(n, [&](std::uint64_t i) {
        out[i] = fn(i);
        return false;
    });
    return out;
}

}  // namespace mhf
