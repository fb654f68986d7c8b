#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace symtutte::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs fn(task) for task in [0, tasks) on up to `threads` workers and returns the
/// results indexed by task, so callers can merge them in a fixed order.
template <class Result, class Fn>
std::vector<Result> run_tasks(std::size_t tasks, unsigned threads, Fn&& fn) {
    std::vector<Result> results(tasks);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), tasks));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(tasks);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace symtutte::detail
