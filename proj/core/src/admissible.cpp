#include "sigmakit/admissible.hpp"

#include "sigmakit/checked.hpp"
#include "sigmakit/divisors.hpp"

#include <gmpxx.h>

#include <array>
#include <numeric>
#include <stdexcept>

namespace sigmakit {

namespace {

bool squarefree_coprime(std::uint64_t cofactor, std::uint64_t m) {
    if (std::gcd(cofactor, m) != 1) return false;
    for (const auto& pp : factor_trial(cofactor))
        if (pp.exponent > 1) return false;
    return true;
}

std::uint64_t totient(std::uint64_t m) {
    std::uint64_t phi = m;
    for (const auto& pp : factor_trial(m)) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

}  // namespace

bool disjoint_families(std::uint64_t m1, std::uint64_t m2) {
    if (m1 == 0 || m2 == 0) throw std::invalid_argument("disjoint_families: arguments must be >= 1");
    if (m1 == m2) return false;
    const std::uint64_t g = std::gcd(m1, m2);
    const std::uint64_t c1 = m2 / g;  // L / m1
    const std::uint64_t c2 = m1 / g;  // L / m2
    return !(squarefree_coprime(c1, m1) && squarefree_coprime(c2, m2));
}

void validate_admissible(const AdmissibleSet& set, const SearchBudget& budget) {
    for (std::size_t i = 0; i < set.members.size(); ++i) {
        const std::uint64_t m = set.members[i];
        if (m == 0) throw std::invalid_argument("admissible set: member 0");
        if (i > 0 && set.members[i - 1] >= m) throw std::invalid_argument("admissible set: members not strictly ascending");
        if (!profile(m, budget).min_exceptions.finite_at_most(set.k))
            throw std::invalid_argument("admissible set: " + std::to_string(m) + " is not " + std::to_string(set.k) +
                                        "-near-perfect");
        for (std::size_t j = 0; j < i; ++j)
            if (!disjoint_families(set.members[j], m))
                throw std::invalid_argument("admissible set: families of " + std::to_string(set.members[j]) + " and " +
                                            std::to_string(m) + " intersect");
    }
}

MLowerBound m_lower_bound(const AdmissibleSet& set, const SearchBudget& budget) {
    validate_admissible(set, budget);
    MLowerBound out;
    for (std::uint64_t m : set.members) {
        const u128 m2 = static_cast<u128>(m) * m;
        mpz_class den;
        mpz_import(den.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0,
                   std::array<std::uint64_t, 2>{static_cast<std::uint64_t>(m2), static_cast<std::uint64_t>(m2 >> 64)}.data());
        out.phi_sum += ExactRational(mpq_class(mpz_class(std::to_string(totient(m))), den));
    }
    const mp_bitcnt_t bits = 192;
    mpf_class pi2(kPiSquared, bits);
    mpf_class sum(out.phi_sum.raw(), bits);
    mpf_class value(6 * sum / pi2, bits);
    out.value = value.get_d();
    mp_exp_t exp = 0;
    // fixed rendering of a value in [0, 1)
    std::string digits = value.get_str(exp, 10, 40);
    if (digits.empty()) digits = "0";
    std::string fixed;
    if (exp <= 0) {
        fixed = "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
    } else {
        const auto e = static_cast<std::size_t>(exp);
        if (digits.size() < e) digits.append(e - digits.size(), '0');
        fixed = digits.substr(0, e) + "." + digits.substr(e);
    }
    const auto dot = fixed.find('.');
    fixed.append(15, '0');
    out.decimal = fixed.substr(0, dot + 16);
    return out;
}

AdmissibleSet greedy_admissible(std::uint32_t k, std::uint64_t x, const SearchBudget& budget,
                                const ScanOptions& options) {
    AdmissibleSet out;
    out.k = k;
    const auto census = census_near(x, k, budget, options, true);
    if (census.undecided > 0) throw std::runtime_error("greedy_admissible: search node limit reached");
    for (std::uint64_t m : census.members) {
        bool keep = true;
        for (std::uint64_t kept : out.members)
            if (!disjoint_families(kept, m)) {
                keep = false;
                break;
            }
        if (keep) out.members.push_back(m);
    }
    return out;
}

}  // namespace sigmakit
