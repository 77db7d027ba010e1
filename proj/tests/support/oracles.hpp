// oracles.hpp
// Slow, obviously-correct reference implementations. Nothing here may call
// into sigmakit; the point is an independent route to every value.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> small, large;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline u64 sigma(u64 n) {
    u64 s = 0;
    for (u64 d : divisors(n)) s += d;
    return s;
}

struct Factor {
    u64 p;
    unsigned e;
};

inline std::vector<Factor> factor(u64 n) {
    std::vector<Factor> out;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline u64 phi(u64 n) {
    u64 c = 0;
    for (u64 i = 1; i <= n; ++i)
        if (std::gcd(i, n) == 1) ++c;
    return c;
}

inline int mu(u64 n) {
    int m = 1;
    for (const auto& f : factor(n)) {
        if (f.e > 1) return 0;
        m = -m;
    }
    return m;
}

inline unsigned big_omega(u64 n) {
    unsigned s = 0;
    for (const auto& f : factor(n)) s += f.e;
    return s;
}

inline u64 largest_prime_factor(u64 n) {
    const auto f = factor(n);
    return f.empty() ? 1 : f.back().p;
}

inline bool squarefree(u64 n) { return mu(n) != 0; }

/// pi(x) by a plain sieve of Eratosthenes.
inline u64 prime_pi(u64 x) {
    if (x < 2) return 0;
    std::vector<bool> composite(x + 1, false);
    u64 c = 0;
    for (u64 i = 2; i <= x; ++i) {
        if (composite[i]) continue;
        ++c;
        for (u64 j = i * i; j <= x; j += i) composite[j] = true;
    }
    return c;
}

/// reach[c] holds the sums (<= target) of c distinct elements, filled by the
/// classic 0/1 knapsack table over (count, sum).
inline std::vector<std::vector<char>> cardinality_table(const std::vector<u64>& elems, u64 target) {
    std::vector<std::vector<char>> reach(elems.size() + 1, std::vector<char>(target + 1, 0));
    reach[0][0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const u64 d = elems[i];
        for (std::size_t c = i + 1; c-- > 0;)
            for (u64 s = target + 1; s-- > d;)
                if (reach[c][s - d]) reach[c + 1][s] = 1;
    }
    return reach;
}

/// Cardinalities c for which some c proper divisors of n sum to sigma(n) - 2n.
/// Empty when n is deficient.
inline std::vector<unsigned> achievable_sizes(u64 n) {
    auto d = divisors(n);
    d.pop_back();
    const u64 s = sigma(n);
    if (s < 2 * n) return {};
    const u64 target = s - 2 * n;
    const auto reach = cardinality_table(d, target);
    std::vector<unsigned> out;
    for (std::size_t c = 0; c < reach.size(); ++c)
        if (reach[c][target]) out.push_back(static_cast<unsigned>(c));
    return out;
}

/// All subsets of a small list, by bitmask. Returns the sizes hitting target.
inline std::set<unsigned> enumerate_sizes(const std::vector<u64>& elems, u64 target) {
    std::set<unsigned> out;
    const std::size_t m = elems.size();
    for (u64 mask = 0; mask < (u64{1} << m); ++mask) {
        u64 s = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) s += elems[i];
        if (s == target) out.insert(static_cast<unsigned>(__builtin_popcountll(mask)));
    }
    return out;
}

inline std::optional<unsigned> min_exceptions(u64 n) {
    const auto sizes = achievable_sizes(n);
    if (sizes.empty()) return std::nullopt;
    return sizes.front();
}

/// n | (b*sigma(n) - k)
inline bool solves(u64 n, std::int64_t k, u64 b) {
    const __int128 v = static_cast<__int128>(b) * sigma(n) - k;
    return v % static_cast<__int128>(n) == 0;
}

/// Regular when n = p*m, p prime, p not dividing m, b | k, sigma(m) = k/b,
/// m | b*sigma(m). Returns the smallest such p.
inline std::optional<u64> regular_prime(u64 n, std::int64_t k, u64 b) {
    if (k <= 0 || k % static_cast<std::int64_t>(b) != 0) return std::nullopt;
    for (u64 p = 2; p <= n; ++p) {
        if (n % p || !is_prime(p)) continue;
        const u64 m = n / p;
        if (m % p == 0) continue;
        const u64 sm = sigma(m);
        if (sm == static_cast<u64>(k) / b && (b * sm) % m == 0) return p;
    }
    return std::nullopt;
}

/// Elements of A(m) = {m*m' : m' squarefree, gcd(m, m') = 1} up to bound.
inline std::set<u64> family(u64 m, u64 bound) {
    std::set<u64> out;
    for (u64 c = 1; m * c <= bound; ++c)
        if (std::gcd(c, m) == 1 && squarefree(c)) out.insert(m * c);
    return out;
}

inline bool families_disjoint(u64 m1, u64 m2, u64 bound) {
    const auto a = family(m1, bound);
    for (u64 v : family(m2, bound))
        if (a.count(v)) return false;
    return true;
}

}  // namespace oracle
