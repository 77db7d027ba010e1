// admissible.hpp
// Sets of near-perfect numbers whose families
//   A(m) = {m * m' : m' squarefree, gcd(m, m') = 1}
// are pairwise disjoint, and the density lower bound they give.

#pragma once

#include "sigmakit/exact_rational.hpp"
#include "sigmakit/near_perfect.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sigmakit {

/// True when A(m1) and A(m2) share no element. A common element exists iff
/// L = lcm(m1, m2) is one, i.e. L/m_i is squarefree and coprime to m_i for
/// both i. Returns false for m1 == m2.
[[nodiscard]] bool disjoint_families(std::uint64_t m1, std::uint64_t m2);

struct AdmissibleSet {
    std::uint32_t k = 0;
    std::vector<std::uint64_t> members;

    friend bool operator==(const AdmissibleSet&, const AdmissibleSet&) = default;
};

/// Throws std::invalid_argument naming the first failure: members not
/// strictly ascending, a member that is not k-near-perfect, or a pair of
/// intersecting families.
void validate_admissible(const AdmissibleSet& set, const SearchBudget& budget = {});

struct MLowerBound {
    /// sum over B of phi(m)/m^2
    ExactRational phi_sum;
    /// 6 * phi_sum / pi^2
    double value = 0.0;
    /// value truncated to 15 decimals
    std::string decimal;
};

/// Validates the set first.
[[nodiscard]] MLowerBound m_lower_bound(const AdmissibleSet& set, const SearchBudget& budget = {});

/// Members of N(k) up to x in ascending order, each kept when its family is
/// disjoint from those already kept.
[[nodiscard]] AdmissibleSet greedy_admissible(std::uint32_t k, std::uint64_t x, const SearchBudget& budget = {},
                                              const ScanOptions& options = {});

/// pi^2 to 30 significant digits.
inline constexpr const char* kPiSquared = "9.86960440108935861883449099987615";

}  // namespace sigmakit
