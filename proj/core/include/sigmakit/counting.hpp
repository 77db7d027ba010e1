// counting.hpp
// Range counts built directly on the sieve.

#pragma once

#include "sigmakit/scan.hpp"

#include <cstdint>
#include <vector>

namespace sigmakit {

/// Phi(x, y) = #{n <= x : P+(n) <= y}, with n = 1 counted as smooth.
/// Throws std::invalid_argument when y < 2.
[[nodiscard]] std::uint64_t count_smooth(std::uint64_t x, std::uint64_t y, const ScanOptions& options = {});

/// #{n <= x : Omega(n) = r}.
[[nodiscard]] std::uint64_t count_omega(std::uint32_t r, std::uint64_t x, const ScanOptions& options = {});

/// histogram[r] = #{n <= x : Omega(n) = r}; sums to x.
[[nodiscard]] std::vector<std::uint64_t> omega_histogram(std::uint64_t x, const ScanOptions& options = {});

/// #{n <= x : mu(n) != 0}.
[[nodiscard]] std::uint64_t count_squarefree(std::uint64_t x, const ScanOptions& options = {});

}  // namespace sigmakit
