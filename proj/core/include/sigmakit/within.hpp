// within.hpp
// (ell; k)-within-perfect numbers, |sigma(n) - ell*n| < k(n), and
// (ell, k)-almost-perfect numbers, sigma(n) = ell*n + k.

#pragma once

#include "sigmakit/checked.hpp"
#include "sigmakit/fraction.hpp"
#include "sigmakit/scan.hpp"
#include "sigmakit/threshold.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sigmakit {

struct WithinCensus {
    std::uint64_t x = 0;
    Ell ell;
    ThresholdSpec threshold = ThresholdSpec::y_over_log_y();
    std::uint64_t count = 0;
    /// Smallest members, ascending, up to the requested sample size.
    std::vector<std::uint64_t> members_sample;

    /// count * log(x) / x
    [[nodiscard]] double normalized() const;
};

/// count * log(x) / x
[[nodiscard]] double normalized_count(std::uint64_t count, std::uint64_t x);

/// |b*sigma - a*n| for ell = a/b.
[[nodiscard]] inline u128 ell_deviation(std::uint64_t n, const Ell& ell, std::uint64_t sigma_n) {
    const u128 lhs = static_cast<u128>(ell.b) * sigma_n;
    const u128 rhs = static_cast<u128>(ell.a) * n;
    return lhs >= rhs ? lhs - rhs : rhs - lhs;
}

[[nodiscard]] bool is_within_perfect(std::uint64_t n, const Ell& ell, const ThresholdSpec& k, std::uint64_t sigma_n);

/// Exact #W(ell; k; x). Requires x >= 2.
[[nodiscard]] WithinCensus count_within(std::uint64_t x, const Ell& ell, const ThresholdSpec& k,
                                        const ScanOptions& options = {}, std::size_t sample_size = 0);

/// counts[t][c] = #W(ell; thresholds[t]; checkpoints[c]) from one pass over
/// [1, max checkpoint]. Checkpoints must be ascending.
[[nodiscard]] std::vector<std::vector<std::uint64_t>> count_within_grid(std::span<const std::uint64_t> checkpoints,
                                                                        const Ell& ell,
                                                                        std::span<const ThresholdSpec> thresholds,
                                                                        const ScanOptions& options = {});

/// #{n <= x : sigma(n) = ell*n + k}.
[[nodiscard]] std::uint64_t count_almost(std::uint64_t x, std::uint64_t ell, std::int64_t k,
                                         const ScanOptions& options = {});

struct SpikeCount {
    std::int64_t k;
    std::uint64_t count;
    friend bool operator==(const SpikeCount&, const SpikeCount&) = default;
};

/// #S(ell, k; x) for every k in [k_min, k_max] from a single pass.
[[nodiscard]] std::vector<SpikeCount> spike_scan(std::uint64_t x, std::uint64_t ell, std::int64_t k_min,
                                                 std::int64_t k_max, const ScanOptions& options = {});

/// Spike counts ordered by count descending, ties by k ascending.
[[nodiscard]] std::vector<SpikeCount> rank_spikes(std::vector<SpikeCount> spikes);

struct PhaseDensity {
    /// #{n <= x : |sigma(n) - ell*n| < c*n}
    std::uint64_t count = 0;
    /// #{n <= x : sigma(n)/n < ell + c}
    std::uint64_t below_upper = 0;
    /// #{n <= x : sigma(n)/n <= ell - c}
    std::uint64_t at_most_lower = 0;
    /// count == below_upper - at_most_lower
    bool identity_check = false;
};

/// Within-perfect count for the linear threshold c*y together with the
/// distribution-function identity behind it.
[[nodiscard]] PhaseDensity phase_density(std::uint64_t x, const Ell& ell, Fraction c, const ScanOptions& options = {});

}  // namespace sigmakit
