#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace proth3::detail {

// Applies fn to every index in [0, count) on `workers` threads and returns the
// results in index order. The first exception thrown by any task is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, unsigned workers, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using T = decltype(fn(std::size_t{}));
    std::vector<std::optional<T>> slots(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const std::size_t threads = std::min<std::size_t>(std::max(workers, 1U), std::max<std::size_t>(count, 1));
        for (std::size_t w = 1; w < threads; ++w) pool.emplace_back(work);
        work();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace proth3::detail
