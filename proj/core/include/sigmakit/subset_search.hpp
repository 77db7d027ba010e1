// subset_search.hpp
// Bounded-cardinality subset sum over a strictly ascending list of positive
// integers (in practice: the divisors of n).
//
// find_subset_of_size() is a depth-first branch and bound. Elements are tried
// in ascending order so the first hit is the lexicographically smallest
// witness; a branch is cut when the remaining target falls outside
// [sum of the r smallest unused, sum of the r largest unused] for the r
// slots still open. Both bounds are O(1) from prefix sums.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sigmakit {

enum class SearchOutcome { Found, Impossible, Undecided };

struct SubsetSearchResult {
    SearchOutcome outcome = SearchOutcome::Impossible;
    /// Ascending; set when outcome == Found.
    std::vector<std::uint64_t> witness;
};

/// Shared node counter; once spent, searches report Undecided.
class NodeBudget {
public:
    explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

    [[nodiscard]] bool charge() { return ++used_ <= limit_; }
    [[nodiscard]] bool exhausted() const { return used_ > limit_; }
    [[nodiscard]] std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

/// Is there a set of exactly `size` distinct elements summing to target?
[[nodiscard]] SubsetSearchResult find_subset_of_size(std::span<const std::uint64_t> ascending, std::uint64_t target,
                                                     std::uint32_t size, NodeBudget& budget);

/// Any-cardinality reachability by bitset dynamic programming. Returns
/// nullopt when target exceeds max_target (the bitset would be too large).
[[nodiscard]] std::optional<bool> subset_sum_reachable(std::span<const std::uint64_t> elements, std::uint64_t target,
                                                       std::uint64_t max_target = std::uint64_t{1} << 28);

}  // namespace sigmakit
