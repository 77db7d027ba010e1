// exact_rational.hpp
// Arbitrary-precision rational in lowest terms, backed by GMP.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sigmakit {

class ExactRational {
public:
    ExactRational() = default;
    ExactRational(std::int64_t num, std::uint64_t den);
    explicit ExactRational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    static ExactRational parse(const std::string& text);

    [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }
    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;
    /// Always "p/q", including "0/1".
    [[nodiscard]] std::string to_fraction_string() const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }
    /// Correctly rounded fixed-point rendering with `digits` decimals.
    [[nodiscard]] std::string to_decimal(int digits) const;

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) { return lhs.value_ == rhs.value_; }
    friend bool operator<(const ExactRational& lhs, const ExactRational& rhs) { return lhs.value_ < rhs.value_; }

private:
    mpq_class value_{0};
};

/// 1/m as an exact rational.
[[nodiscard]] ExactRational reciprocal(std::uint64_t m);

}  // namespace sigmakit
