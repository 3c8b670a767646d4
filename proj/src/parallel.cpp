#include "sumprod/parallel.hpp"

#include <cstdlib>

namespace sumprod {

unsigned default_parallelism() {
    if (const char* env = std::getenv("SUMPROD_PARALLELISM")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    return 1;
}

void parallel_for(uint64_t n, unsigned workers, const std::function<void(uint64_t)>& f) {
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (uint64_t i = 0; i < n; ++i) f(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::atomic<uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= n) return;
                f(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace sumprod
