#include "sigmakit/within.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sigmakit {

double normalized_count(std::uint64_t count, std::uint64_t x) {
    return static_cast<double>(count) * std::log(static_cast<double>(x)) / static_cast<double>(x);
}

double WithinCensus::normalized() const { return normalized_count(count, x); }

bool is_within_perfect(std::uint64_t n, const Ell& ell, const ThresholdSpec& k, std::uint64_t sigma_n) {
    return below_threshold(k, ell_deviation(n, ell, sigma_n), ell.b, n);
}

WithinCensus count_within(std::uint64_t x, const Ell& ell, const ThresholdSpec& k, const ScanOptions& options,
                          std::size_t sample_size) {
    if (x < 2) throw std::invalid_argument("count_within: x must be >= 2");
    struct Part {
        std::uint64_t count = 0;
        std::vector<std::uint64_t> sample;
    };
    auto parts = map_segments(1, x, options, [&](const SieveSegment& segment) {
        Part part;
        for (const auto& r : segment.records) {
            if (!is_within_perfect(r.n, ell, k, r.sigma)) continue;
            ++part.count;
            if (part.sample.size() < sample_size) part.sample.push_back(r.n);
        }
        return part;
    });
    WithinCensus census{x, ell, k, 0, {}};
    for (auto& part : parts) {
        census.count += part.count;
        for (auto n : part.sample)
            if (census.members_sample.size() < sample_size) census.members_sample.push_back(n);
    }
    return census;
}

std::vector<std::vector<std::uint64_t>> count_within_grid(std::span<const std::uint64_t> checkpoints, const Ell& ell,
                                                          std::span<const ThresholdSpec> thresholds,
                                                          const ScanOptions& options) {
    if (checkpoints.empty()) return std::vector<std::vector<std::uint64_t>>(thresholds.size());
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) || checkpoints.front() == 0)
        throw std::invalid_argument("count_within_grid: checkpoints must be positive and ascending");
    const std::size_t nt = thresholds.size();
    const std::size_t nc = checkpoints.size();

    // per segment: hits[t * nc + bucket], bucket = first checkpoint >= n
    auto parts = map_segments(1, checkpoints.back(), options, [&](const SieveSegment& segment) {
        std::vector<std::uint64_t> hits(nt * nc, 0);
        std::size_t bucket = static_cast<std::size_t>(
            std::lower_bound(checkpoints.begin(), checkpoints.end(), segment.lo) - checkpoints.begin());
        for (const auto& r : segment.records) {
            while (checkpoints[bucket] < r.n) ++bucket;
            const u128 dev = ell_deviation(r.n, ell, r.sigma);
            for (std::size_t t = 0; t < nt; ++t)
                if (below_threshold(thresholds[t], dev, ell.b, r.n)) ++hits[t * nc + bucket];
        }
        return hits;
    });

    std::vector<std::vector<std::uint64_t>> counts(nt, std::vector<std::uint64_t>(nc, 0));
    for (const auto& hits : parts)
        for (std::size_t t = 0; t < nt; ++t)
            for (std::size_t c = 0; c < nc; ++c) counts[t][c] += hits[t * nc + c];
    for (auto& row : counts)
        for (std::size_t c = 1; c < nc; ++c) row[c] += row[c - 1];
    return counts;
}

namespace {

i128 signed_excess(const ArithmeticRecord& r, std::uint64_t ell) {
    return static_cast<i128>(r.sigma) - static_cast<i128>(ell) * static_cast<i128>(r.n);
}

}  // namespace

std::uint64_t count_almost(std::uint64_t x, std::uint64_t ell, std::int64_t k, const ScanOptions& options) {
    if (x == 0) return 0;
    return count_records(1, x, options, [&](const ArithmeticRecord& r) { return signed_excess(r, ell) == k; });
}

std::vector<SpikeCount> spike_scan(std::uint64_t x, std::uint64_t ell, std::int64_t k_min, std::int64_t k_max,
                                   const ScanOptions& options) {
    if (k_min > k_max) throw std::invalid_argument("spike_scan: k_min > k_max");
    const std::size_t width = static_cast<std::size_t>(k_max - k_min) + 1;
    std::vector<std::uint64_t> totals(width, 0);
    if (x > 0) {
        auto parts = map_segments(1, x, options, [&](const SieveSegment& segment) {
            std::vector<std::uint64_t> counts(width, 0);
            for (const auto& r : segment.records) {
                const i128 e = signed_excess(r, ell);
                if (e >= k_min && e <= k_max) ++counts[static_cast<std::size_t>(e - k_min)];
            }
            return counts;
        });
        for (const auto& counts : parts)
            for (std::size_t i = 0; i < width; ++i) totals[i] += counts[i];
    }
    std::vector<SpikeCount> out;
    out.reserve(width);
    for (std::size_t i = 0; i < width; ++i) out.push_back({k_min + static_cast<std::int64_t>(i), totals[i]});
    return out;
}

std::vector<SpikeCount> rank_spikes(std::vector<SpikeCount> spikes) {
    std::stable_sort(spikes.begin(), spikes.end(), [](const SpikeCount& a, const SpikeCount& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.k < b.k;
    });
    return spikes;
}

PhaseDensity phase_density(std::uint64_t x, const Ell& ell, Fraction c, const ScanOptions& options) {
    if (c.num == 0) throw std::invalid_argument("phase_density: c must be positive");
    // With ell = a/b and c = p/q, compare q*b*sigma against (q*a +- p*b) * n.
    const u128 qa = checked_mul128(c.den, ell.a);
    const u128 pb = checked_mul128(c.num, ell.b);
    const u128 qb = checked_mul128(c.den, ell.b);
    const u128 upper = qa + pb;
    const bool lower_positive = qa > pb;
    const u128 lower = lower_positive ? qa - pb : 0;

    struct Tally {
        std::uint64_t count = 0;
        std::uint64_t below_upper = 0;
        std::uint64_t at_most_lower = 0;
    };
    auto parts = map_segments(1, x, options, [&](const SieveSegment& segment) {
        Tally t;
        for (const auto& r : segment.records) {
            const u128 scaled_sigma = qb * r.sigma;
            const u128 ell_n = qa * r.n;
            const u128 dev = scaled_sigma >= ell_n ? scaled_sigma - ell_n : ell_n - scaled_sigma;
            if (dev < pb * r.n) ++t.count;
            if (scaled_sigma < upper * r.n) ++t.below_upper;
            if (lower_positive && scaled_sigma <= lower * r.n) ++t.at_most_lower;
        }
        return t;
    });
    PhaseDensity out;
    for (const auto& t : parts) {
        out.count += t.count;
        out.below_upper += t.below_upper;
        out.at_most_lower += t.at_most_lower;
    }
    out.identity_check = out.count == out.below_upper - out.at_most_lower;
    return out;
}

}  // namespace sigmakit
