#include "sigmakit/divisors.hpp"

#include "sigmakit/checked.hpp"
#include "sigmakit/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigmakit {

Factorizer::Factorizer(std::uint64_t table_limit) : table_limit_(table_limit) {
    if (table_limit_ > 0xffffffffULL) throw std::out_of_range("Factorizer: table limit exceeds 2^32");
    if (table_limit_ >= 2) spf_ = smallest_prime_factor_table(static_cast<std::uint32_t>(table_limit_));
}

Factorization Factorizer::factor(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("cannot factor 0");
    if (n > table_limit_ || spf_.empty()) return factor_trial(n);
    Factorization f;
    while (n > 1) {
        const std::uint64_t p = spf_[n];
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.push_back({p, e});
    }
    return f;
}

Factorization factor_trial(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cannot factor 0");
    Factorization f;
    auto take = [&](std::uint64_t p) {
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.push_back({p, e});
    };
    take(2);
    take(3);
    for (std::uint64_t p = 5; p <= n / p; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

std::vector<std::uint64_t> divisors_from(const Factorization& f) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (std::uint32_t k = 1; k <= e; ++k) {
            pk = checked_mul(pk, p);
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors_of: n must be >= 1");
    return divisors_from(factor_trial(n));
}

std::uint64_t sigma_from(const Factorization& f) {
    std::uint64_t s = 1;
    for (const auto& [p, e] : f) {
        std::uint64_t term = 1;
        std::uint64_t pk = 1;
        for (std::uint32_t k = 1; k <= e; ++k) {
            pk = checked_mul(pk, p);
            term = checked_add(term, pk);
        }
        s = checked_mul(s, term);
    }
    return s;
}

}  // namespace sigmakit
