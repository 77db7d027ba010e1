#include "sigmakit/threshold.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace sigmakit {

ThresholdSpec ThresholdSpec::constant(Fraction c) {
    if (c.num == 0) throw std::invalid_argument("constant threshold must be positive");
    return ThresholdSpec(ConstantThreshold{c});
}

ThresholdSpec ThresholdSpec::power(Fraction eps) {
    if (eps.num == 0 || eps.num >= eps.den) throw std::invalid_argument("power threshold exponent must lie in (0, 1)");
    return ThresholdSpec(PowerThreshold{eps});
}

ThresholdSpec ThresholdSpec::linear(Fraction c) {
    if (c.num == 0) throw std::invalid_argument("linear threshold must be positive");
    return ThresholdSpec(LinearThreshold{c});
}

ThresholdSpec ThresholdSpec::y_over_log_y() { return ThresholdSpec(YOverLogYThreshold{}); }

ThresholdSpec ThresholdSpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    const auto kind = text.substr(0, colon);
    if (kind == "ylogy" || kind == "y/logy") return y_over_log_y();
    if (colon == std::string_view::npos) throw std::invalid_argument("threshold needs kind:param, got '" + std::string(text) + "'");
    const auto param = Fraction::parse(text.substr(colon + 1));
    if (kind == "const" || kind == "constant") return constant(param);
    if (kind == "power" || kind == "pow") return power(param);
    if (kind == "linear") return linear(param);
    throw std::invalid_argument("unknown threshold kind '" + std::string(kind) + "'");
}

std::string ThresholdSpec::kind_name() const {
    struct V {
        std::string operator()(const ConstantThreshold&) const { return "constant"; }
        std::string operator()(const PowerThreshold&) const { return "power"; }
        std::string operator()(const LinearThreshold&) const { return "linear"; }
        std::string operator()(const YOverLogYThreshold&) const { return "ylogy"; }
    };
    return std::visit(V{}, value_);
}

std::string ThresholdSpec::param_string() const {
    struct V {
        std::string operator()(const ConstantThreshold& t) const { return t.c.to_string(); }
        std::string operator()(const PowerThreshold& t) const { return t.eps.to_string(); }
        std::string operator()(const LinearThreshold& t) const { return t.c.to_string(); }
        std::string operator()(const YOverLogYThreshold&) const { return ""; }
    };
    return std::visit(V{}, value_);
}

std::string ThresholdSpec::to_string() const {
    const auto p = param_string();
    return p.empty() ? kind_name() : kind_name() + ":" + p;
}

double ThresholdSpec::evaluate(double y) const {
    struct V {
        double y;
        double operator()(const ConstantThreshold& t) const { return t.c.to_double(); }
        double operator()(const PowerThreshold& t) const { return std::pow(y, t.eps.to_double()); }
        double operator()(const LinearThreshold& t) const { return t.c.to_double() * y; }
        double operator()(const YOverLogYThreshold&) const { return y / std::log(y); }
    };
    return std::visit(V{y}, value_);
}

namespace {

mpz_class to_mpz(u128 v) {
    mpz_class hi;
    mpz_class lo;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
    return (hi << 64) + lo;
}

mpz_class pow_mpz(const mpz_class& base, std::uint64_t e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

long double log_u128(u128 v) {
    return std::log(static_cast<long double>(v));
}

// Slack for the floating-point screen; anything closer goes to exact arithmetic.
constexpr long double kScreen = 1e-9L;

bool y_over_log_y_exact(u128 deviation, std::uint64_t scale, std::uint64_t n) {
    // deviation * log n < scale * n, with log n bracketed by directed rounding.
    const mpz_class rhs_z = to_mpz(static_cast<u128>(scale) * n);
    const mpz_class dev_z = to_mpz(deviation);
    for (mpfr_prec_t prec = 128; prec <= 1 << 16; prec *= 2) {
        mpfr_t lo, hi, rhs;
        mpfr_inits2(prec, lo, hi, rhs, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_ui(lo, n, MPFR_RNDD);
        mpfr_set_ui(hi, n, MPFR_RNDU);
        mpfr_log(lo, lo, MPFR_RNDD);
        mpfr_log(hi, hi, MPFR_RNDU);
        mpfr_mul_z(lo, lo, dev_z.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(hi, hi, dev_z.get_mpz_t(), MPFR_RNDU);
        mpfr_set_z(rhs, rhs_z.get_mpz_t(), MPFR_RNDN);
        const bool below = mpfr_less_p(hi, rhs) != 0;
        const bool above = mpfr_greaterequal_p(lo, rhs) != 0;
        mpfr_clears(lo, hi, rhs, static_cast<mpfr_ptr>(nullptr));
        if (below) return true;
        if (above) return false;
    }
    throw std::runtime_error("y/log y comparison did not resolve");
}

}  // namespace

bool power_less(u128 deviation, std::uint64_t scale, std::uint64_t n, Fraction exponent) {
    if (deviation == 0) return true;
    const long double lhs = static_cast<long double>(exponent.den) * log_u128(deviation);
    const long double rhs = static_cast<long double>(exponent.den) * std::log(static_cast<long double>(scale)) +
                            static_cast<long double>(exponent.num) * std::log(static_cast<long double>(n));
    const long double slack = kScreen * (1.0L + std::fabs(rhs));
    if (lhs < rhs - slack) return true;
    if (lhs > rhs + slack) return false;
    const mpz_class left = pow_mpz(to_mpz(deviation), exponent.den);
    const mpz_class right = pow_mpz(mpz_class(static_cast<unsigned long>(scale)), exponent.den) *
                            pow_mpz(mpz_class(static_cast<unsigned long>(n)), exponent.num);
    return left < right;
}

bool at_least_power(u128 deviation, std::uint64_t n, Fraction exponent) { return !power_less(deviation, 1, n, exponent); }

bool below_threshold(const ThresholdSpec& threshold, u128 deviation, std::uint64_t scale, std::uint64_t n) {
    struct V {
        u128 d;
        std::uint64_t b;
        std::uint64_t n;
        bool operator()(const ConstantThreshold& t) const {
            // d / b < p / q  <=>  q d < b p
            return checked_mul128(d, t.c.den) < static_cast<u128>(b) * t.c.num;
        }
        bool operator()(const PowerThreshold& t) const { return power_less(d, b, n, t.eps); }
        bool operator()(const LinearThreshold& t) const {
            return checked_mul128(d, t.c.den) < checked_mul128(static_cast<u128>(b) * t.c.num, n);
        }
        bool operator()(const YOverLogYThreshold&) const {
            if (n == 1) return true;
            const long double lhs = static_cast<long double>(d) * std::log(static_cast<long double>(n));
            const long double rhs = static_cast<long double>(b) * static_cast<long double>(n);
            const long double slack = kScreen * rhs;
            if (lhs < rhs - slack) return true;
            if (lhs > rhs + slack) return false;
            return y_over_log_y_exact(d, b, n);
        }
    };
    return std::visit(V{deviation, scale, n}, threshold.variant());
}

}  // namespace sigmakit
