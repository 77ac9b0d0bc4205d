#include "shw/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace shw {

unsigned worker_count() {
    unsigned configured = 0;
    if (const char* raw = std::getenv("SHW_THREADS")) {
        try {
            configured = static_cast<unsigned>(std::stoul(raw));
        } catch (const std::exception&) {
            configured = 0;  // unreadable values mean "auto"
        }
    }
    if (configured == 0) {
        configured = std::thread::hardware_concurrency();
    }
    return configured == 0 ? 1 : configured;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const unsigned workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto drain = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const std::size_t spawned = std::min<std::size_t>(workers, count) - 1;
    pool.reserve(spawned);
    for (std::size_t t = 0; t < spawned; ++t) {
        pool.emplace_back(drain);
    }
    drain();
    for (std::thread& worker : pool) {
        worker.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace shw
