#ifndef FRACSTOKES_PARALLEL_HPP
#define FRACSTOKES_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fracstokes {

/// Work-stealing index loop: workers pull indices from a shared atomic
/// counter until exhausted. Callers write results into preallocated slots
/// keyed by index, so output order is deterministic no matter how the
/// indices were scheduled. The first worker exception is rethrown.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn, unsigned threads = 0) {
    if (count == 0) return;
    unsigned n = threads ? threads : std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (static_cast<std::size_t>(n) > count) n = static_cast<unsigned>(count);

    if (n == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace fracstokes

#endif  // FRACSTOKES_PARALLEL_HPP
