#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace biharm {

// Applies fn to every index in [0, count) on up to `workers` threads and
// returns the results in index order. `order` lists the indices in the
// sequence they should be handed out (e.g. most expensive first).
template <class Result, class Fn>
std::vector<Result> parallel_ordered_map(std::size_t count, unsigned workers, Fn fn,
                                         const std::vector<std::size_t>& order = {})
{
    std::vector<Result> out(count);
    std::vector<std::size_t> schedule = order;
    if (schedule.empty()) {
        schedule.resize(count);
        for (std::size_t i = 0; i < count; ++i) schedule[i] = i;
    }
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&]() {
        for (;;) {
            const std::size_t slot = next.fetch_add(1);
            if (slot >= schedule.size()) return;
            try {
                out[schedule[slot]] = fn(schedule[slot]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(schedule.size());
                return;
            }
        }
    };
    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

inline unsigned default_workers()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace biharm
