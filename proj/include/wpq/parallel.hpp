#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace wpq {

// Splits [lo, hi) into contiguous blocks, evaluates fn on each block in a
// worker pool, and combines the per-block results in block order. The
// ordered reduction keeps results byte-identical for any worker count.
template <typename R>
R parallel_block_sum(long long lo, long long hi, unsigned workers,
                     const std::function<R(long long, long long)>& fn) {
    if (hi <= lo) return R{};
    unsigned nblocks = workers == 0 ? 1 : workers;
    long long span = hi - lo;
    if (static_cast<long long>(nblocks) > span) nblocks = static_cast<unsigned>(span);
    std::vector<R> results(nblocks);
    if (nblocks == 1) {
        results[0] = fn(lo, hi);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nblocks);
        for (unsigned b = 0; b < nblocks; ++b) {
            long long blo = lo + span * b / nblocks;
            long long bhi = lo + span * (b + 1) / nblocks;
            pool.emplace_back([&results, &fn, b, blo, bhi] { results[b] = fn(blo, bhi); });
        }
        for (auto& t : pool) t.join();
    }
    R total{};
    for (const R& r : results) total = total + r;
    return total;
}

}  // namespace wpq
