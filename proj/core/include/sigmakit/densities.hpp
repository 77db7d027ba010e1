// densities.hpp
// Empirical distribution of sigma(n)/n, reciprocal sums over multiply
// perfect numbers, the constants c_k and a few closed-form exponents.

#pragma once

#include "sigmakit/exact_rational.hpp"
#include "sigmakit/fraction.hpp"
#include "sigmakit/near_perfect.hpp"
#include "sigmakit/scan.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sigmakit {

struct DistributionPoint {
    Fraction u;
    std::uint64_t count = 0;  ///< #{n <= x : sigma(n)/n <= u}
    double value = 0.0;       ///< count / x
};

struct EmpiricalDistribution {
    std::uint64_t x = 0;
    /// In the order the sample points were given.
    std::vector<DistributionPoint> points;
};

/// Throws std::invalid_argument for x == 0.
[[nodiscard]] EmpiricalDistribution empirical_distribution(std::uint64_t x, std::span<const Fraction> us,
                                                           const ScanOptions& options = {});

struct ReciprocalSum {
    std::vector<std::uint64_t> members;
    ExactRational exact;
    double value = 0.0;
};

/// Sum of 1/m over m <= limit with sigma(m) = ell*m.
[[nodiscard]] ReciprocalSum sum_inverse_perfect(std::uint64_t limit, std::uint64_t ell,
                                                const ScanOptions& options = {});

struct ConstantCk {
    std::uint32_t k = 0;
    /// Ascending union over t <= k of {m : tau(m) = t, m is (k - t)-near-perfect}.
    std::vector<std::uint64_t> m_set;
    ExactRational value;  ///< sum of 1/m over m_set
};

/// Throws std::invalid_argument unless 4 <= k <= 9.
[[nodiscard]] ConstantCk constant_c_k(std::uint32_t k, std::uint64_t search_bound = 1'000'000,
                                      const SearchBudget& budget = {}, const ScanOptions& options = {});

/// floor(log2(k + 4)) - 3, for k >= 4.
[[nodiscard]] std::uint32_t f_exponent(std::uint64_t k);

/// Smallest j with 5 * 2^j > k + 1, for k >= 4.
[[nodiscard]] std::uint32_t j0_exponent(std::uint64_t k);

/// Even perfect numbers 2^(p-1) (2^p - 1) <= limit, ascending.
[[nodiscard]] std::vector<std::uint64_t> even_perfect(std::uint64_t limit);

/// Numbers 2q <= limit with 2^q - 1 prime. Only q <= 63 is examined.
[[nodiscard]] std::vector<std::uint64_t> mersenne_exponent_doubles(std::uint64_t limit);

}  // namespace sigmakit
