// checked.hpp
// Overflow-checked unsigned arithmetic. Every multiplicative value the sieve
// produces goes through these helpers; overflow raises std::range_error
// instead of wrapping.

#pragma once

#include <cstdint>
#include <stdexcept>

namespace sigmakit {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

[[nodiscard]] inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::range_error("sigmakit: 64-bit multiplication overflow");
    return r;
}

[[nodiscard]] inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::range_error("sigmakit: 64-bit addition overflow");
    return r;
}

[[nodiscard]] inline u128 checked_mul128(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::range_error("sigmakit: 128-bit multiplication overflow");
    return r;
}

[[nodiscard]] inline std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = 0;
    for (int shift = 31; shift >= 0; --shift) {
        std::uint64_t c = r | (std::uint64_t{1} << shift);
        if (c <= n / c) r = c;
    }
    return r;
}

[[nodiscard]] inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace sigmakit
