// near_perfect.hpp
// Near-perfect and exactly-perfect numbers.
//
// n is k-near-perfect when sigma(n) - 2n is a sum of at most k distinct
// proper divisors of n (the exceptions), and k-exactly-perfect when some
// exception set has exactly k elements. Perfect numbers use 0 exceptions.

#pragma once

#include "sigmakit/fraction.hpp"
#include "sigmakit/scan.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigmakit {

/// Which divisors may be exceptions. ProperDivisors is the definition;
/// AllDivisors also admits n itself.
enum class ExceptionPool { ProperDivisors, AllDivisors };

struct SearchBudget {
    std::uint32_t k_cap = 16;
    std::uint64_t node_limit = 10'000'000;
    ExceptionPool pool = ExceptionPool::ProperDivisors;
};

struct MinExceptions {
    enum class Kind {
        Exact,      ///< value holds the minimum
        AboveCap,   ///< no exception set of size <= k_cap
        Infinite,   ///< no exception set of any size (deficient, or proved by exhaustion)
        Undecided,  ///< node limit hit before the minimum was settled
    };
    Kind kind = Kind::Infinite;
    std::uint32_t value = 0;

    [[nodiscard]] bool finite_at_most(std::uint32_t k) const { return kind == Kind::Exact && value <= k; }
    /// "3", ">16", "inf" or "undecided".
    [[nodiscard]] std::string to_string(std::uint32_t k_cap) const;

    friend bool operator==(const MinExceptions&, const MinExceptions&) = default;
};

struct NearPerfectProfile {
    std::uint64_t n = 0;
    std::int64_t abundance = 0;
    std::uint32_t k_cap = 0;
    MinExceptions min_exceptions;
    /// Ascending cardinalities c <= k_cap with an exception set of size c.
    std::vector<std::uint32_t> achievable;
    /// Cardinalities left open by the node limit.
    std::vector<std::uint32_t> undecided;
    /// Lexicographically smallest ascending witness for each achievable size.
    std::map<std::uint32_t, std::vector<std::uint64_t>> witnesses;

    [[nodiscard]] bool achieves(std::uint32_t c) const;
};

/// Profile from precomputed data: divisors is the full ascending divisor list
/// of n (ending with n).
[[nodiscard]] NearPerfectProfile profile(std::uint64_t n, std::uint64_t sigma_n,
                                         std::span<const std::uint64_t> divisors, const SearchBudget& budget = {});

[[nodiscard]] NearPerfectProfile profile(std::uint64_t n, const SearchBudget& budget = {});

struct NearCensus {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> members;
    std::uint64_t undecided = 0;
};

/// N(k; x): n <= x with min_exceptions(n) <= k.
[[nodiscard]] NearCensus census_near(std::uint64_t x, std::uint32_t k, const SearchBudget& budget = {},
                                     const ScanOptions& options = {}, bool collect_members = true);

struct ExactCensus {
    std::uint64_t count = 0;
    std::uint64_t undecided = 0;
    friend bool operator==(const ExactCensus&, const ExactCensus&) = default;
};

/// #E(k; x): n <= x with an exception set of exactly k elements.
[[nodiscard]] ExactCensus census_exact(std::uint64_t x, std::uint32_t k, const SearchBudget& budget = {},
                                       const ScanOptions& options = {});

/// #(E(k1) and E(k2) and [1, x]).
[[nodiscard]] ExactCensus census_exact_intersection(std::uint64_t x, std::uint32_t k1, std::uint32_t k2,
                                                    const SearchBudget& budget = {}, const ScanOptions& options = {});

struct ExactIntersectionRow {
    std::uint64_t x = 0;
    std::uint64_t both = 0;
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    std::uint64_t undecided = 0;
    friend bool operator==(const ExactIntersectionRow&, const ExactIntersectionRow&) = default;
};

/// E_{k1,k2}(x), E_{k1}(x), E_{k2}(x) at each ascending checkpoint from one
/// pass.
[[nodiscard]] std::vector<ExactIntersectionRow> exact_intersection_grid(std::span<const std::uint64_t> checkpoints,
                                                                        std::uint32_t k1, std::uint32_t k2,
                                                                        const SearchBudget& budget = {},
                                                                        const ScanOptions& options = {});

struct EpsRatio {
    /// members of E(k; x) with sigma(n) - 2n >= n^eps
    std::uint64_t num = 0;
    /// #E(k; x)
    std::uint64_t den = 0;
    std::uint64_t undecided = 0;
};

[[nodiscard]] EpsRatio ratio_E_eps(std::uint64_t x, std::uint32_t k, Fraction eps, const SearchBudget& budget = {},
                                   const ScanOptions& options = {});

struct CountingLemmaViolation {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    bool lhs = false;
    bool rhs = false;
    bool undecided = false;
};

/// For n = p*m <= x with p = P+(n) exactly dividing n, checks
///   [n has <= k exceptions including every divisor of m]
///     <=> [tau(m) <= k and m is (k - tau(m))-near-perfect]
/// and returns the n where the two sides disagree (or the search was
/// undecided).
[[nodiscard]] std::vector<CountingLemmaViolation> verify_counting_lemma(std::uint64_t x, std::uint32_t k,
                                                                        const SearchBudget& budget = {},
                                                                        const ScanOptions& options = {});

/// All m <= search_bound with tau(m) = tau_target and min_exceptions(m) <=
/// k_budget, ascending.
[[nodiscard]] std::vector<std::uint64_t> solve_structured_m(std::uint32_t tau_target, std::uint32_t k_budget,
                                                            std::uint64_t search_bound,
                                                            const SearchBudget& budget = {},
                                                            const ScanOptions& options = {});

inline constexpr std::uint64_t kPseudoperfectBound = 1'000'000;

/// Some subset of the proper divisors of n sums to n. Throws
/// std::out_of_range for n > kPseudoperfectBound.
[[nodiscard]] bool is_pseudoperfect(std::uint64_t n);

/// Which of the four shapes of non-perfect 1-near-perfect numbers with two
/// distinct prime factors m has:
///   1: 2^(t-1) (2^t - 2^k - 1) with 2^t - 2^k - 1 prime
///   2: 2^(2p-1) (2^p - 1) with 2^p - 1 prime
///   3: 2^(p-1) (2^p - 1)^2 with 2^p - 1 prime
///   4: 40
/// nullopt when none applies.
[[nodiscard]] std::optional<int> two_prime_near_perfect_form(std::uint64_t m);

/// Semicolon-joined decimal list, "" for an empty list.
[[nodiscard]] std::string join_semicolon(std::span<const std::uint64_t> values);

}  // namespace sigmakit
