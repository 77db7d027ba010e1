// threshold.hpp
// Threshold functions k(y) and exact evaluation of |sigma(n) - ell*n| < k(n).

#pragma once

#include "sigmakit/checked.hpp"
#include "sigmakit/fraction.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace sigmakit {

struct ConstantThreshold {
    Fraction c;
    friend bool operator==(const ConstantThreshold&, const ConstantThreshold&) = default;
};
/// y^eps with 0 < eps < 1 stored exactly.
struct PowerThreshold {
    Fraction eps;
    friend bool operator==(const PowerThreshold&, const PowerThreshold&) = default;
};
struct LinearThreshold {
    Fraction c;
    friend bool operator==(const LinearThreshold&, const LinearThreshold&) = default;
};
/// y / log y.
struct YOverLogYThreshold {
    friend bool operator==(const YOverLogYThreshold&, const YOverLogYThreshold&) = default;
};

class ThresholdSpec {
public:
    using Variant = std::variant<ConstantThreshold, PowerThreshold, LinearThreshold, YOverLogYThreshold>;

    static ThresholdSpec constant(Fraction c);
    static ThresholdSpec power(Fraction eps);
    static ThresholdSpec linear(Fraction c);
    static ThresholdSpec y_over_log_y();

    /// "const:3", "power:1/2", "power:0.9", "linear:1/2", "ylogy".
    static ThresholdSpec parse(std::string_view text);

    [[nodiscard]] const Variant& variant() const { return value_; }
    /// "constant", "power", "linear" or "ylogy".
    [[nodiscard]] std::string kind_name() const;
    /// The parameter as "p/q"; empty for ylogy.
    [[nodiscard]] std::string param_string() const;
    [[nodiscard]] std::string to_string() const;
    /// Floating-point k(y), for display only.
    [[nodiscard]] double evaluate(double y) const;

    friend bool operator==(const ThresholdSpec&, const ThresholdSpec&) = default;

private:
    explicit ThresholdSpec(Variant v) : value_(v) {}
    Variant value_;
};

/// Exactly decides deviation < scale * k(n), i.e. |b*sigma - a*n| < b*k(n)
/// when deviation = |b*sigma - a*n| and scale = b. Power thresholds compare
/// integer powers; y/log y uses directed-rounding brackets of log n. For
/// n = 1, y/log y is read as +infinity.
[[nodiscard]] bool below_threshold(const ThresholdSpec& threshold, u128 deviation, std::uint64_t scale, std::uint64_t n);

/// deviation^q < scale^q * n^p decided exactly.
[[nodiscard]] bool power_less(u128 deviation, std::uint64_t scale, std::uint64_t n, Fraction exponent);

/// deviation >= n^(p/q) decided exactly.
[[nodiscard]] bool at_least_power(u128 deviation, std::uint64_t n, Fraction exponent);

}  // namespace sigmakit
