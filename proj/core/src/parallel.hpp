#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace purerank::detail {

inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(0..count-1) across at most `workers` threads. Exceptions are
/// collected per task and the one with the lowest task index is rethrown,
/// so error reporting does not depend on scheduling.
template <typename Fn>
void parallel_tasks(std::size_t count, unsigned workers, Fn&& fn) {
    if (count == 0)
        return;
    unsigned pool = resolve_workers(workers);
    if (pool > count)
        pool = static_cast<unsigned>(count);
    if (pool <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (unsigned t = 0; t < pool; ++t)
        threads.emplace_back(worker);
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace purerank::detail
