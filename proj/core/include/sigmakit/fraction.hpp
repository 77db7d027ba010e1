// fraction.hpp
// Small positive rationals used as parameters: threshold constants, the
// exponent of y^eps, the ratio ell = a/b and distribution sample points.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sigmakit {

/// Nonnegative rational num/den in lowest terms with den > 0.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    /// Reduces to lowest terms. Throws std::invalid_argument on den == 0.
    static Fraction make(std::uint64_t num, std::uint64_t den);

    /// Accepts "p/q", an integer "p", or a finite decimal "0.25".
    static Fraction parse(std::string_view text);

    [[nodiscard]] double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs);
};

/// The target ratio ell = a/b of sigma(n)/n, with gcd(a,b) = 1 and a/b >= 1.
struct Ell {
    std::uint64_t a = 2;
    std::uint64_t b = 1;

    static Ell make(std::uint64_t a, std::uint64_t b);
    static Ell parse(std::string_view text);

    [[nodiscard]] bool is_integer() const { return b == 1; }
    [[nodiscard]] double to_double() const { return static_cast<double>(a) / static_cast<double>(b); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Ell&, const Ell&) = default;
};

}  // namespace sigmakit
