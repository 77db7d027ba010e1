// congruence.hpp
// Solutions of b*sigma(n) = k (mod n), split into regular solutions
// n = p*m (p prime, p does not divide m, m | b*sigma(m), sigma(m) = k/b) and
// sporadic ones (everything else; all solutions when b does not divide k).

#pragma once

#include "sigmakit/divisors.hpp"
#include "sigmakit/scan.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigmakit {

enum class SolutionKind { Regular, Sporadic, NotASolution };

[[nodiscard]] std::string to_string(SolutionKind kind);

struct RegularDecomposition {
    std::uint64_t p;
    std::uint64_t m;
    friend bool operator==(const RegularDecomposition&, const RegularDecomposition&) = default;
};

struct CongruenceClassification {
    std::uint64_t n = 0;
    std::int64_t k = 0;
    std::uint64_t b = 1;
    SolutionKind kind = SolutionKind::NotASolution;
    /// Set exactly when kind == Regular; the smallest qualifying p.
    std::optional<RegularDecomposition> regular;

    friend bool operator==(const CongruenceClassification&, const CongruenceClassification&) = default;
};

/// Too many results for an in-memory list; use for_each_solution instead.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// n | (b*sigma(n) - k), with k signed.
[[nodiscard]] bool solves_congruence(std::uint64_t n, std::int64_t k, std::uint64_t b, std::uint64_t sigma_n);

/// Classification given sigma(n) and the factorization of n.
[[nodiscard]] CongruenceClassification classify(std::uint64_t n, std::int64_t k, std::uint64_t b,
                                                std::uint64_t sigma_n, const Factorization& factors);

/// Classification of a single n (factors n by trial division).
[[nodiscard]] CongruenceClassification classify(std::uint64_t n, std::int64_t k, std::uint64_t b = 1);

/// Every solution n <= x in ascending order, classified, streamed to fn.
void for_each_solution(std::uint64_t x, std::int64_t k, std::uint64_t b, const ScanOptions& options,
                       const std::function<void(const CongruenceClassification&)>& fn);

/// All sporadic solutions n <= x, ascending. Throws BudgetExceeded past
/// max_results.
[[nodiscard]] std::vector<std::uint64_t> enumerate_sporadic(std::uint64_t x, std::int64_t k, std::uint64_t b = 1,
                                                            const ScanOptions& options = {},
                                                            std::size_t max_results = std::size_t{1} << 22);

/// All regular solutions n <= x, ascending, with their decompositions.
[[nodiscard]] std::vector<CongruenceClassification> enumerate_regular(std::uint64_t x, std::int64_t k,
                                                                      std::uint64_t b = 1,
                                                                      const ScanOptions& options = {},
                                                                      std::size_t max_results = std::size_t{1} << 22);

}  // namespace sigmakit
