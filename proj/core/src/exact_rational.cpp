#include "sigmakit/exact_rational.hpp"

#include <stdexcept>

namespace sigmakit {

ExactRational::ExactRational(std::int64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("ExactRational with zero denominator");
    mpz_class n;
    mpz_class d;
    mpz_set_si(n.get_mpz_t(), num);
    mpz_set_ui(d.get_mpz_t(), den);
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

ExactRational ExactRational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("not a rational: '" + text + "'");
    return ExactRational(q);
}

std::string ExactRational::to_string() const { return value_.get_str(); }

std::string ExactRational::to_fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string ExactRational::to_decimal(int digits) const {
    // round-half-even on the exact value scaled by 10^digits
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpq_class scaled = value_ * scale;
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    mpz_class q;
    mpz_class r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    const int cmp = mpz_class(2 * r) < scaled.get_den() ? -1 : (mpz_class(2 * r) == scaled.get_den() ? 0 : 1);
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;

    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (negative && q != 0) s.insert(0, "-");
    return s;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    value_.canonicalize();
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    value_.canonicalize();
    return *this;
}

ExactRational reciprocal(std::uint64_t m) { return ExactRational(1, m); }

}  // namespace sigmakit
