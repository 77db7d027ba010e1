// scan.hpp
// Parallel map over consecutive sieve segments with results returned in
// segment order, so any reduction the caller performs is independent of the
// worker count.

#pragma once

#include "sigmakit/segment_cache.hpp"
#include "sigmakit/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace sigmakit {

struct ScanOptions {
    unsigned threads = 1;
    std::uint64_t segment_length = std::uint64_t{1} << 18;
    std::optional<std::filesystem::path> cache_dir;
    SieveConfig sieve;
};

struct SegmentBounds {
    std::uint64_t lo;
    std::uint64_t hi;
};

/// [lo, hi] cut at multiples of segment_length, so cached files line up
/// across runs with different ranges.
[[nodiscard]] inline std::vector<SegmentBounds> plan_segments(std::uint64_t lo, std::uint64_t hi,
                                                              std::uint64_t segment_length) {
    std::vector<SegmentBounds> out;
    if (lo > hi) return out;
    if (segment_length == 0) segment_length = 1;
    std::uint64_t cur = lo;
    while (true) {
        std::uint64_t block_end = (cur / segment_length + 1) * segment_length - 1;
        std::uint64_t end = std::min(block_end, hi);
        out.push_back({cur, end});
        if (end == hi) break;
        cur = end + 1;
    }
    return out;
}

/// Calls fn(segment) for every segment of [lo, hi] and returns the results
/// in ascending segment order.
template <class Fn>
auto map_segments(std::uint64_t lo, std::uint64_t hi, const ScanOptions& options, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, const SieveSegment&>> {
    using Result = std::invoke_result_t<Fn&, const SieveSegment&>;
    const auto plan = plan_segments(lo, hi, options.segment_length);
    std::vector<std::optional<Result>> slots(plan.size());

    std::optional<SegmentCache> cache;
    if (options.cache_dir) cache.emplace(*options.cache_dir);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= plan.size()) return;
            try {
                SieveSegment segment;
                if (cache) {
                    segment = cache->load_or_compute(plan[i].lo, plan[i].hi, options.sieve);
                } else {
                    segment = sieve_range(plan[i].lo, plan[i].hi, options.sieve);
                }
                slots[i].emplace(fn(segment));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(plan.size());
                return;
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(plan.size())));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Result> results;
    results.reserve(slots.size());
    for (auto& slot : slots) results.push_back(std::move(*slot));
    return results;
}

/// Streaming variant: maps up to `threads` segments at a time and hands each
/// result to consume() in ascending segment order, so memory stays bounded
/// by one wave of results.
template <class Map, class Consume>
void for_each_segment_ordered(std::uint64_t lo, std::uint64_t hi, const ScanOptions& options, Map&& map,
                              Consume&& consume) {
    if (lo > hi) return;
    const std::uint64_t wave = std::max<std::uint64_t>(1, options.threads) * options.segment_length;
    for (std::uint64_t start = lo;;) {
        const std::uint64_t end = hi - start < wave ? hi : (start + wave) / options.segment_length * options.segment_length - 1;
        const std::uint64_t stop = std::max(end, start);
        for (auto& result : map_segments(start, stop, options, map)) consume(std::move(result));
        if (stop >= hi) return;
        start = stop + 1;
    }
}

/// Counts records in [lo, hi] satisfying pred.
template <class Fn>
std::uint64_t count_records(std::uint64_t lo, std::uint64_t hi, const ScanOptions& options, Fn&& pred) {
    auto parts = map_segments(lo, hi, options, [&](const SieveSegment& segment) {
        std::uint64_t c = 0;
        for (const auto& r : segment.records)
            if (pred(r)) ++c;
        return c;
    });
    std::uint64_t total = 0;
    for (auto c : parts) total += c;
    return total;
}

}  // namespace sigmakit
