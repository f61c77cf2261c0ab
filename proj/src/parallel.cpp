#include "zs/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace zs {

namespace {
int g_budget = 1;
}

void set_thread_budget(int n) { g_budget = std::max(1, n); }
int thread_budget() { return g_budget; }

void parallel_blocks(std::size_t n, std::size_t block_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    block_size = std::max<std::size_t>(1, block_size);
    std::size_t nblocks = (n + block_size - 1) / block_size;
    int workers = static_cast<int>(std::min<std::size_t>(g_budget, nblocks));

    auto run_block = [&](std::size_t bi) {
        std::size_t b = bi * block_size;
        std::size_t e = std::min(n, b + block_size);
        fn(bi, b, e);
    };

    if (workers <= 1) {
        for (std::size_t bi = 0; bi < nblocks; ++bi) run_block(bi);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t bi = next.fetch_add(1);
            if (bi >= nblocks) return;
            try {
                run_block(bi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace zs
