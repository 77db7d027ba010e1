#include "sigmakit/fraction.hpp"

#include "sigmakit/checked.hpp"

#include <charconv>
#include <stdexcept>

namespace sigmakit {

namespace {

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("not a nonnegative integer: '" + std::string(text) + "'");
    return value;
}

}  // namespace

Fraction Fraction::make(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("fraction with zero denominator");
    const std::uint64_t g = gcd_u64(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    return Fraction{num, den};
}

Fraction Fraction::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return make(parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1)));
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (frac.size() > 18) throw std::invalid_argument("too many decimals: '" + std::string(text) + "'");
        std::uint64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const std::uint64_t w = whole.empty() ? 0 : parse_u64(whole);
        const std::uint64_t f = frac.empty() ? 0 : parse_u64(frac);
        return make(checked_add(checked_mul(w, den), f), den);
    }
    return make(parse_u64(text), 1);
}

std::string Fraction::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs) {
    const u128 l = static_cast<u128>(lhs.num) * rhs.den;
    const u128 r = static_cast<u128>(rhs.num) * lhs.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Ell Ell::make(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw std::invalid_argument("ell must be a positive rational");
    const auto f = Fraction::make(a, b);
    if (f.num < f.den) throw std::invalid_argument("ell must be >= 1");
    return Ell{f.num, f.den};
}

Ell Ell::parse(std::string_view text) {
    const auto f = Fraction::parse(text);
    return make(f.num, f.den);
}

std::string Ell::to_string() const {
    if (b == 1) return std::to_string(a);
    return std::to_string(a) + "/" + std::to_string(b);
}

}  // namespace sigmakit
