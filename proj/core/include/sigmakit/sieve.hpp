// sieve.hpp
// Per-integer arithmetic invariants over a range: sigma, tau, omega, Omega,
// phi, mu, largest and smallest prime factor.
//
// Two routes produce identical records:
//   linear_sieve(limit)   classic linear sieve over [1, limit], keyed on the
//                         smallest prime factor;
//   sieve_range(lo, hi)   segmented sieve over [lo, hi] that recomputes every
//                         record from base primes <= sqrt(hi).
//
// n = 1 conventions: sigma = tau = phi = mu = 1, omega = Omega = 0,
// p_plus = spf = 1.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sigmakit {

struct ArithmeticRecord {
    std::uint64_t n = 0;
    std::uint64_t sigma = 0;
    std::uint32_t tau = 0;
    std::uint8_t small_omega = 0;
    std::uint8_t big_omega = 0;
    std::int8_t mu = 0;
    std::uint64_t phi = 0;
    std::uint64_t p_plus = 0;
    std::uint64_t spf = 0;

    friend bool operator==(const ArithmeticRecord&, const ArithmeticRecord&) = default;
};

/// Dense block of records for the inclusive range [lo, hi].
struct SieveSegment {
    std::uint64_t lo = 1;
    std::uint64_t hi = 0;
    std::vector<ArithmeticRecord> records;

    [[nodiscard]] std::size_t size() const { return records.size(); }
    [[nodiscard]] bool empty() const { return records.empty(); }
    /// Record for n; n must lie in [lo, hi].
    [[nodiscard]] const ArithmeticRecord& at(std::uint64_t n) const;

    friend bool operator==(const SieveSegment&, const SieveSegment&) = default;
};

struct SieveConfig {
    /// Largest n any sieve call may touch.
    std::uint64_t global_bound = 100'000'000;
    /// Largest number of records a single sieve_range call may materialize.
    std::uint64_t max_segment_length = std::uint64_t{1} << 24;
};

/// hi - lo + 1 exceeds the configured memory budget; the caller must split.
class RangeTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument for lo == 0 or lo > hi, std::out_of_range
/// when hi exceeds config.global_bound, RangeTooLarge when the segment is
/// longer than config.max_segment_length.
[[nodiscard]] SieveSegment sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config = {});

/// Records for [1, limit] via the linear sieve.
[[nodiscard]] std::vector<ArithmeticRecord> linear_sieve(std::uint64_t limit);

}  // namespace sigmakit
