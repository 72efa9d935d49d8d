#pragma once

#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace hamming {

// Worker cap from HW_THREADS (0 or unset = hardware concurrency). Always >= 1.
int thread_budget();

// Splits [begin, end) into contiguous chunks, evaluates chunk_fn(lo, hi) on
// worker threads, then merges the per-chunk results in ascending chunk order.
// The result is independent of the thread count as long as chunk_fn is a pure
// function of its range and merge is associative; merge order is fixed, so it
// need not commute (ordered outputs like sorted id lists survive intact).
template <class T, class ChunkFn, class MergeFn>
T parallel_map_reduce(std::uint64_t begin, std::uint64_t end, T init,
                      ChunkFn&& chunk_fn, MergeFn&& merge) {
    if (begin >= end)
        return init;
    const std::uint64_t total = end - begin;
    constexpr std::uint64_t min_chunk = 1024;
    std::uint64_t nchunks = std::min<std::uint64_t>(
        static_cast<std::uint64_t>(thread_budget()),
        (total + min_chunk - 1) / min_chunk);
    if (nchunks <= 1)
        return merge(std::move(init), chunk_fn(begin, end));

    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    ranges.reserve(nchunks);
    const std::uint64_t base = total / nchunks, extra = total % nchunks;
    std::uint64_t lo = begin;
    for (std::uint64_t i = 0; i < nchunks; ++i) {
        const std::uint64_t hi = lo + base + (i < extra ? 1 : 0);
        ranges.emplace_back(lo, hi);
        lo = hi;
    }

    std::vector<std::optional<T>> results(nchunks);
    std::vector<std::thread> workers;
    workers.reserve(nchunks);
    for (std::uint64_t i = 0; i < nchunks; ++i)
        workers.emplace_back([&, i] { results[i] = chunk_fn(ranges[i].first, ranges[i].second); });
    for (auto& w : workers)
        w.join();

    T acc = std::move(init);
    for (auto& r : results)
        acc = merge(std::move(acc), std::move(*r));
    return acc;
}

}  // namespace hamming
