#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace dirspace {

// Worker count from the THREADS environment variable; single-threaded when
// unset. Read once per process.
int thread_count();

// Split [0, n) into fixed-size blocks, evaluate `work` per block (any thread,
// any order), then combine the per-block results strictly in block order.
// Results are therefore identical for every thread count.
template <class Acc>
Acc parallel_blocks(std::uint64_t n, std::uint64_t block_size,
                    const std::function<Acc(std::uint64_t, std::uint64_t)>& work) {
    const std::uint64_t nblocks = block_size ? (n + block_size - 1) / block_size : 0;
    std::vector<Acc> partial(nblocks);
    const int workers = std::min<std::uint64_t>(thread_count(), nblocks ? nblocks : 1);
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < nblocks; ++b)
            partial[b] = work(b * block_size, std::min(n, (b + 1) * block_size));
    } else {
        std::atomic<std::uint64_t> next{0};
        auto run = [&] {
            for (;;) {
                std::uint64_t b = next.fetch_add(1);
                if (b >= nblocks) return;
                partial[b] = work(b * block_size, std::min(n, (b + 1) * block_size));
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    Acc total{};
    for (std::uint64_t b = 0; b < nblocks; ++b) total.combine(partial[b]);
    return total;
}

} // namespace dirspace
