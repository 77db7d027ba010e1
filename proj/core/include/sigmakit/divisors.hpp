// divisors.hpp
// Factorization and divisor enumeration.

#pragma once

#include <cstdint>
#include <vector>

namespace sigmakit {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Factors through a smallest-prime-factor table for n <= table_limit and by
/// trial division above it.
class Factorizer {
public:
    explicit Factorizer(std::uint64_t table_limit = 0);

    [[nodiscard]] Factorization factor(std::uint64_t n) const;
    [[nodiscard]] std::uint64_t table_limit() const { return table_limit_; }

private:
    std::uint64_t table_limit_ = 0;
    std::vector<std::uint32_t> spf_;
};

[[nodiscard]] Factorization factor_trial(std::uint64_t n);

/// All divisors of the factored number, ascending.
[[nodiscard]] std::vector<std::uint64_t> divisors_from(const Factorization& f);

/// All divisors of n ascending, ending with n. Throws std::invalid_argument
/// for n == 0.
[[nodiscard]] std::vector<std::uint64_t> divisors_of(std::uint64_t n);

[[nodiscard]] std::uint64_t sigma_from(const Factorization& f);

}  // namespace sigmakit
