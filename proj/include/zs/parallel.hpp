#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace zs {

// Process-wide worker budget used by parallel_blocks. Defaults to 1.
void set_thread_budget(int n);
int thread_budget();

// Runs fn(block_index, begin, end) for each fixed-size block of [0, n).
// Blocks are defined by block_size alone, never by the thread count, and any
// reduction the caller performs over block indices in order is therefore
// byte-identical for every thread budget.
void parallel_blocks(std::size_t n, std::size_t block_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

// Deterministic sum helper: evaluates term(i) for i in [0, n), accumulating
// per fixed block and then reducing blocks in index order.
template <class T, class F>
T parallel_sum(std::size_t n, std::size_t block_size, T zero, F&& term) {
    std::size_t nblocks = n == 0 ? 0 : (n + block_size - 1) / block_size;
    std::vector<T> partial(nblocks, zero);
    parallel_blocks(n, block_size, [&](std::size_t bi, std::size_t b, std::size_t e) {
        T acc = zero;
        for (std::size_t i = b; i < e; ++i) acc += term(i);
        partial[bi] = acc;
    });
    T total = zero;
    for (const T& p : partial) total += p;
    return total;
}

} // namespace zs
