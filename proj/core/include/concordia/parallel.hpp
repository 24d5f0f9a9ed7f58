#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace concordia {

// Worker count: CONCORDIA_THREADS if set and positive, hardware concurrency otherwise.
inline unsigned thread_width() {
    if (const char* env = std::getenv("CONCORDIA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace detail {
inline thread_local bool in_parallel_region = false;
}

// Runs f(i) for i in [0, n). Nested calls degrade to serial execution, so callers
// never have to care whether they are already inside a parallel region.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    unsigned width = thread_width();
    if (n <= 1 || width <= 1 || detail::in_parallel_region) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    unsigned workers = width < n ? width : static_cast<unsigned>(n);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&] {
        detail::in_parallel_region = true;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace concordia
