#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gencase {

/// Process-wide worker count for parallel_for_index. 1 = serial.
void set_thread_count(unsigned n);
unsigned thread_count();

namespace detail {

inline unsigned& thread_count_ref() {
    static unsigned n = 1;
    return n;
}

inline bool& in_parallel_region() {
    thread_local bool inside = false;
    return inside;
}

} // namespace detail

inline void set_thread_count(unsigned n) {
    detail::thread_count_ref() = n == 0 ? 1 : n;
}

inline unsigned thread_count() {
    return detail::thread_count_ref();
}

/// Runs fn(i) for i in [0, count). Each index writes only its own slot of
/// whatever the caller preallocated, so results are independent of how
/// indices land on threads; callers reduce sequentially afterwards. Nested
/// calls run serially on the worker (only the outermost loop fans out).
/// The first exception thrown by any index is rethrown on the caller.
template <typename Fn>
void parallel_for_index(uint64_t count, Fn&& fn) {
    const unsigned workers = thread_count();
    if (workers <= 1 || count < 2 * workers || detail::in_parallel_region()) {
        for (uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const uint64_t begin = w * chunk;
        const uint64_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            detail::in_parallel_region() = true;
            try {
                for (uint64_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace gencase
