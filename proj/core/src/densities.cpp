#include "sigmakit/densities.hpp"

#include "sigmakit/checked.hpp"
#include "sigmakit/primes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sigmakit {

EmpiricalDistribution empirical_distribution(std::uint64_t x, std::span<const Fraction> us,
                                             const ScanOptions& options) {
    if (x == 0) throw std::invalid_argument("empirical_distribution: x must be >= 1");
    const std::size_t nu = us.size();
    auto parts = map_segments(1, x, options, [&](const SieveSegment& segment) {
        std::vector<std::uint64_t> counts(nu, 0);
        for (const auto& r : segment.records)
            for (std::size_t i = 0; i < nu; ++i)
                if (static_cast<u128>(us[i].den) * r.sigma <= static_cast<u128>(us[i].num) * r.n) ++counts[i];
        return counts;
    });
    EmpiricalDistribution out;
    out.x = x;
    for (std::size_t i = 0; i < nu; ++i) {
        DistributionPoint p{us[i], 0, 0.0};
        for (const auto& part : parts) p.count += part[i];
        p.value = static_cast<double>(p.count) / static_cast<double>(x);
        out.points.push_back(p);
    }
    return out;
}

ReciprocalSum sum_inverse_perfect(std::uint64_t limit, std::uint64_t ell, const ScanOptions& options) {
    if (ell == 0) throw std::invalid_argument("sum_inverse_perfect: ell must be >= 1");
    ReciprocalSum out;
    if (limit == 0) return out;
    for_each_segment_ordered(
        1, limit, options,
        [&](const SieveSegment& segment) {
            std::vector<std::uint64_t> hits;
            for (const auto& r : segment.records)
                if (static_cast<u128>(r.sigma) == static_cast<u128>(ell) * r.n) hits.push_back(r.n);
            return hits;
        },
        [&](std::vector<std::uint64_t> hits) { out.members.insert(out.members.end(), hits.begin(), hits.end()); });
    for (std::uint64_t m : out.members) out.exact += reciprocal(m);
    out.value = out.exact.to_double();
    return out;
}

ConstantCk constant_c_k(std::uint32_t k, std::uint64_t search_bound, const SearchBudget& budget,
                        const ScanOptions& options) {
    if (k < 4 || k > 9) throw std::invalid_argument("constant_c_k: k must lie in [4, 9]");
    ConstantCk out;
    out.k = k;
    for (std::uint32_t t = 1; t <= k; ++t) {
        const auto found = solve_structured_m(t, k - t, search_bound, budget, options);
        out.m_set.insert(out.m_set.end(), found.begin(), found.end());
    }
    std::sort(out.m_set.begin(), out.m_set.end());
    for (std::uint64_t m : out.m_set) out.value += reciprocal(m);
    return out;
}

std::uint32_t f_exponent(std::uint64_t k) {
    if (k < 4) throw std::invalid_argument("f_exponent: k must be >= 4");
    return static_cast<std::uint32_t>(std::bit_width(k + 4)) - 4;
}

std::uint32_t j0_exponent(std::uint64_t k) {
    if (k < 4) throw std::invalid_argument("j0_exponent: k must be >= 4");
    std::uint32_t j = 0;
    while ((static_cast<u128>(5) << j) <= static_cast<u128>(k) + 1) ++j;
    return j;
}

std::vector<std::uint64_t> even_perfect(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint32_t p = 2; p < 64; ++p) {
        const u128 mersenne = (u128{1} << p) - 1;
        const u128 n = (u128{1} << (p - 1)) * mersenne;
        if (n > limit) break;
        if (is_prime_u64(p) && is_prime_u64(static_cast<std::uint64_t>(mersenne)))
            out.push_back(static_cast<std::uint64_t>(n));
    }
    return out;
}

std::vector<std::uint64_t> mersenne_exponent_doubles(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint32_t q = 2; q < 64 && 2 * std::uint64_t{q} <= limit; ++q)
        if (is_prime_u64(q) && is_prime_u64((std::uint64_t{1} << q) - 1)) out.push_back(2 * std::uint64_t{q});
    return out;
}

}  // namespace sigmakit
