// primes.hpp
// Prime generation (linear sieve) and deterministic primality for 64-bit
// integers.

#pragma once

#include <cstdint>
#include <vector>

namespace sigmakit {

/// All primes p <= limit, ascending.
[[nodiscard]] std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Smallest-prime-factor table spf[0..limit] from a linear sieve; spf[0] =
/// spf[1] = 1.
[[nodiscard]] std::vector<std::uint32_t> smallest_prime_factor_table(std::uint32_t limit);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
[[nodiscard]] bool is_prime_u64(std::uint64_t n);

}  // namespace sigmakit
