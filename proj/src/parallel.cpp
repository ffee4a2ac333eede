#include "amplikit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace amplikit {

std::size_t configured_thread_count() {
    std::size_t count = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("AMPLIKIT_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && parsed > 0) {
            count = std::min<std::size_t>(count, static_cast<std::size_t>(parsed));
        }
    }
    return count;
}

void parallel_for_index(std::size_t count,
                        const std::function<void(std::size_t)>& body) {
    const std::size_t workers =
        std::min(configured_thread_count(), std::max<std::size_t>(count, 1));
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace amplikit
