#include "sigmakit/near_perfect.hpp"

#include "sigmakit/checked.hpp"
#include "sigmakit/divisors.hpp"
#include "sigmakit/primes.hpp"
#include "sigmakit/subset_search.hpp"
#include "sigmakit/threshold.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace sigmakit {

std::string MinExceptions::to_string(std::uint32_t k_cap) const {
    switch (kind) {
        case Kind::Exact: return std::to_string(value);
        case Kind::AboveCap: return ">" + std::to_string(k_cap);
        case Kind::Infinite: return "inf";
        case Kind::Undecided: return "undecided";
    }
    return "undecided";
}

bool NearPerfectProfile::achieves(std::uint32_t c) const {
    return std::binary_search(achievable.begin(), achievable.end(), c);
}

namespace {

enum class Status { Yes, No, Undecided };

std::span<const std::uint64_t> exception_pool(std::span<const std::uint64_t> divisors, ExceptionPool pool) {
    if (pool == ExceptionPool::AllDivisors || divisors.empty()) return divisors;
    return divisors.first(divisors.size() - 1);
}

Status achieves_size(std::span<const std::uint64_t> pool, std::int64_t abundance, std::uint32_t c,
                     NodeBudget& nodes) {
    if (abundance < 0) return Status::No;
    if (c == 0) return abundance == 0 ? Status::Yes : Status::No;
    if (abundance == 0 || c > pool.size()) return Status::No;
    switch (find_subset_of_size(pool, static_cast<std::uint64_t>(abundance), c, nodes).outcome) {
        case SearchOutcome::Found: return Status::Yes;
        case SearchOutcome::Impossible: return Status::No;
        case SearchOutcome::Undecided: return Status::Undecided;
    }
    return Status::Undecided;
}

/// Some exception set of size <= k.
Status near_within(std::span<const std::uint64_t> pool, std::int64_t abundance, std::uint32_t k,
                   NodeBudget& nodes) {
    if (abundance < 0) return Status::No;
    if (abundance == 0) return Status::Yes;
    bool open = false;
    const auto top = static_cast<std::uint32_t>(std::min<std::size_t>(k, pool.size()));
    for (std::uint32_t c = 1; c <= top; ++c) {
        const auto s = achieves_size(pool, abundance, c, nodes);
        if (s == Status::Yes) return Status::Yes;
        if (s == Status::Undecided) open = true;
    }
    return open ? Status::Undecided : Status::No;
}

std::int64_t abundance_of(std::uint64_t n, std::uint64_t sigma) {
    return static_cast<std::int64_t>(sigma) - 2 * static_cast<std::int64_t>(n);
}

// Calls fn(acc, record, divisors) for every n <= x with sigma(n) >= 2n.
template <class Acc, class Fn>
std::vector<Acc> map_nondeficient(std::uint64_t x, const ScanOptions& options, Fn fn) {
    const Factorizer factorizer(std::min<std::uint64_t>(x, std::uint64_t{1} << 24));
    return map_segments(1, x, options, [&](const SieveSegment& segment) {
        Acc acc{};
        for (const auto& r : segment.records) {
            if (r.sigma < 2 * r.n) continue;
            const auto divisors = divisors_from(factorizer.factor(r.n));
            fn(acc, r, std::span<const std::uint64_t>(divisors));
        }
        return acc;
    });
}

}  // namespace

NearPerfectProfile profile(std::uint64_t n, std::uint64_t sigma_n, std::span<const std::uint64_t> divisors,
                           const SearchBudget& budget) {
    NearPerfectProfile out;
    out.n = n;
    out.abundance = abundance_of(n, sigma_n);
    out.k_cap = budget.k_cap;
    const auto pool = exception_pool(divisors, budget.pool);

    if (out.abundance < 0) {
        out.min_exceptions = {MinExceptions::Kind::Infinite, 0};
        return out;
    }
    if (out.abundance == 0) {
        out.min_exceptions = {MinExceptions::Kind::Exact, 0};
        out.achievable.push_back(0);
        out.witnesses[0] = {};
        return out;
    }

    NodeBudget nodes(budget.node_limit);
    const auto top = static_cast<std::uint32_t>(std::min<std::size_t>(budget.k_cap, pool.size()));
    for (std::uint32_t c = 1; c <= top; ++c) {
        auto result = find_subset_of_size(pool, static_cast<std::uint64_t>(out.abundance), c, nodes);
        if (result.outcome == SearchOutcome::Found) {
            out.achievable.push_back(c);
            out.witnesses[c] = std::move(result.witness);
        } else if (result.outcome == SearchOutcome::Undecided) {
            out.undecided.push_back(c);
        }
    }

    if (!out.achievable.empty() &&
        (out.undecided.empty() || out.undecided.front() > out.achievable.front())) {
        out.min_exceptions = {MinExceptions::Kind::Exact, out.achievable.front()};
    } else if (!out.undecided.empty()) {
        out.min_exceptions = {MinExceptions::Kind::Undecided, 0};
    } else if (budget.k_cap >= pool.size()) {
        out.min_exceptions = {MinExceptions::Kind::Infinite, 0};
    } else {
        const auto reachable = subset_sum_reachable(pool, static_cast<std::uint64_t>(out.abundance));
        out.min_exceptions = {reachable && !*reachable ? MinExceptions::Kind::Infinite : MinExceptions::Kind::AboveCap, 0};
    }
    return out;
}

NearPerfectProfile profile(std::uint64_t n, const SearchBudget& budget) {
    if (n == 0) throw std::invalid_argument("profile: n must be >= 1");
    const auto divisors = divisors_of(n);
    const std::uint64_t sigma = std::accumulate(divisors.begin(), divisors.end(), std::uint64_t{0});
    return profile(n, sigma, divisors, budget);
}

NearCensus census_near(std::uint64_t x, std::uint32_t k, const SearchBudget& budget, const ScanOptions& options,
                       bool collect_members) {
    if (k > budget.k_cap) throw std::invalid_argument("census_near: k exceeds k_cap");
    auto parts = map_nondeficient<NearCensus>(x, options, [&](NearCensus& acc, const ArithmeticRecord& r,
                                                              std::span<const std::uint64_t> divisors) {
        NodeBudget nodes(budget.node_limit);
        const auto s = near_within(exception_pool(divisors, budget.pool), abundance_of(r.n, r.sigma), k, nodes);
        if (s == Status::Yes) {
            ++acc.count;
            if (collect_members) acc.members.push_back(r.n);
        } else if (s == Status::Undecided) {
            ++acc.undecided;
        }
    });
    NearCensus out;
    for (auto& part : parts) {
        out.count += part.count;
        out.undecided += part.undecided;
        out.members.insert(out.members.end(), part.members.begin(), part.members.end());
    }
    return out;
}

std::vector<ExactIntersectionRow> exact_intersection_grid(std::span<const std::uint64_t> checkpoints,
                                                          std::uint32_t k1, std::uint32_t k2,
                                                          const SearchBudget& budget, const ScanOptions& options) {
    if (k1 > budget.k_cap || k2 > budget.k_cap) throw std::invalid_argument("exact census: k exceeds k_cap");
    if (checkpoints.empty()) return {};
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw std::invalid_argument("exact census: checkpoints must be ascending");
    const std::size_t nc = checkpoints.size();

    using Buckets = std::vector<ExactIntersectionRow>;
    auto parts = map_nondeficient<Buckets>(checkpoints.back(), options, [&](Buckets& acc, const ArithmeticRecord& r,
                                                                            std::span<const std::uint64_t> divisors) {
        if (acc.empty()) acc.resize(nc);
        const std::size_t bucket = static_cast<std::size_t>(
            std::lower_bound(checkpoints.begin(), checkpoints.end(), r.n) - checkpoints.begin());
        const auto pool = exception_pool(divisors, budget.pool);
        const auto abundance = abundance_of(r.n, r.sigma);
        NodeBudget nodes(budget.node_limit);
        const auto s1 = achieves_size(pool, abundance, k1, nodes);
        const auto s2 = k2 == k1 ? s1 : achieves_size(pool, abundance, k2, nodes);
        auto& row = acc[bucket];
        if (s1 == Status::Yes) ++row.first;
        if (s2 == Status::Yes) ++row.second;
        if (s1 == Status::Yes && s2 == Status::Yes) ++row.both;
        if (s1 == Status::Undecided || s2 == Status::Undecided) ++row.undecided;
    });

    std::vector<ExactIntersectionRow> rows(nc);
    for (const auto& part : parts) {
        for (std::size_t c = 0; c < part.size(); ++c) {
            rows[c].both += part[c].both;
            rows[c].first += part[c].first;
            rows[c].second += part[c].second;
            rows[c].undecided += part[c].undecided;
        }
    }
    for (std::size_t c = 0; c < nc; ++c) {
        rows[c].x = checkpoints[c];
        if (c > 0) {
            rows[c].both += rows[c - 1].both;
            rows[c].first += rows[c - 1].first;
            rows[c].second += rows[c - 1].second;
            rows[c].undecided += rows[c - 1].undecided;
        }
    }
    return rows;
}

ExactCensus census_exact(std::uint64_t x, std::uint32_t k, const SearchBudget& budget, const ScanOptions& options) {
    if (x == 0) return {};
    const std::uint64_t cp[] = {x};
    const auto rows = exact_intersection_grid(cp, k, k, budget, options);
    return {rows.front().first, rows.front().undecided};
}

ExactCensus census_exact_intersection(std::uint64_t x, std::uint32_t k1, std::uint32_t k2, const SearchBudget& budget,
                                      const ScanOptions& options) {
    if (x == 0) return {};
    const std::uint64_t cp[] = {x};
    const auto rows = exact_intersection_grid(cp, k1, k2, budget, options);
    return {rows.front().both, rows.front().undecided};
}

EpsRatio ratio_E_eps(std::uint64_t x, std::uint32_t k, Fraction eps, const SearchBudget& budget,
                     const ScanOptions& options) {
    if (k > budget.k_cap) throw std::invalid_argument("ratio_E_eps: k exceeds k_cap");
    if (eps.num == 0 || eps.num >= eps.den) throw std::invalid_argument("ratio_E_eps: eps must lie in (0, 1)");
    auto parts = map_nondeficient<EpsRatio>(x, options, [&](EpsRatio& acc, const ArithmeticRecord& r,
                                                            std::span<const std::uint64_t> divisors) {
        NodeBudget nodes(budget.node_limit);
        const auto abundance = abundance_of(r.n, r.sigma);
        const auto s = achieves_size(exception_pool(divisors, budget.pool), abundance, k, nodes);
        if (s == Status::Undecided) ++acc.undecided;
        if (s != Status::Yes) return;
        ++acc.den;
        if (at_least_power(static_cast<u128>(abundance), r.n, eps)) ++acc.num;
    });
    EpsRatio out;
    for (const auto& p : parts) {
        out.num += p.num;
        out.den += p.den;
        out.undecided += p.undecided;
    }
    return out;
}

std::vector<CountingLemmaViolation> verify_counting_lemma(std::uint64_t x, std::uint32_t k,
                                                          const SearchBudget& budget, const ScanOptions& options) {
    const Factorizer factorizer(std::min<std::uint64_t>(x, std::uint64_t{1} << 24));
    auto parts = map_segments(1, x, options, [&](const SieveSegment& segment) {
        std::vector<CountingLemmaViolation> bad;
        for (const auto& r : segment.records) {
            if (r.n < 2) continue;
            auto factors = factorizer.factor(r.n);
            const PrimePower top = factors.back();
            if (top.exponent != 1) continue;
            const std::uint64_t p = top.prime;
            const std::uint64_t m = r.n / p;
            factors.pop_back();
            const auto m_divisors = divisors_from(factors);
            const std::uint64_t sigma_m = sigma_from(factors);
            const auto tau_m = static_cast<std::uint32_t>(m_divisors.size());

            CountingLemmaViolation v{r.n, p, m, false, false, false};
            NodeBudget nodes(budget.node_limit);
            if (tau_m <= k) {
                // left: the exceptions of n contain every divisor of m; the rest
                // come from the proper divisors of n divisible by p
                const std::int64_t rest = abundance_of(r.n, r.sigma) - static_cast<std::int64_t>(sigma_m);
                std::vector<std::uint64_t> multiples;
                for (std::uint64_t d : m_divisors)
                    if (d != m) multiples.push_back(d * p);
                const auto left = near_within(multiples, rest, k - tau_m, nodes);
                // right: m itself is (k - tau(m))-near-perfect
                const auto right = near_within(std::span<const std::uint64_t>(m_divisors).first(m_divisors.size() - 1),
                                               abundance_of(m, sigma_m), k - tau_m, nodes);
                v.undecided = left == Status::Undecided || right == Status::Undecided;
                v.lhs = left == Status::Yes;
                v.rhs = right == Status::Yes;
            }
            if (v.undecided || v.lhs != v.rhs) bad.push_back(v);
        }
        return bad;
    });
    std::vector<CountingLemmaViolation> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

std::vector<std::uint64_t> solve_structured_m(std::uint32_t tau_target, std::uint32_t k_budget,
                                              std::uint64_t search_bound, const SearchBudget& budget,
                                              const ScanOptions& options) {
    struct Acc {
        std::vector<std::uint64_t> found;
        std::uint64_t undecided = 0;
    };
    auto parts = map_segments(1, search_bound, options, [&](const SieveSegment& segment) {
        Acc acc;
        for (const auto& r : segment.records) {
            if (r.tau != tau_target || r.sigma < 2 * r.n) continue;
            const auto divisors = divisors_from(factor_trial(r.n));
            NodeBudget nodes(budget.node_limit);
            const auto s = near_within(exception_pool(divisors, budget.pool), abundance_of(r.n, r.sigma), k_budget, nodes);
            if (s == Status::Yes) acc.found.push_back(r.n);
            if (s == Status::Undecided) ++acc.undecided;
        }
        return acc;
    });
    std::vector<std::uint64_t> out;
    for (auto& part : parts) {
        if (part.undecided > 0) throw std::runtime_error("solve_structured_m: search node limit reached");
        out.insert(out.end(), part.found.begin(), part.found.end());
    }
    return out;
}

bool is_pseudoperfect(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("is_pseudoperfect: n must be >= 1");
    if (n > kPseudoperfectBound) throw std::out_of_range("is_pseudoperfect: n above " + std::to_string(kPseudoperfectBound));
    auto divisors = divisors_of(n);
    divisors.pop_back();
    return subset_sum_reachable(divisors, n, kPseudoperfectBound).value();
}

std::optional<int> two_prime_near_perfect_form(std::uint64_t m) {
    if (m == 40) return 4;
    const auto f = factor_trial(m);
    if (f.size() != 2 || f[0].prime != 2) return std::nullopt;
    const std::uint32_t a = f[0].exponent;
    const std::uint64_t q = f[1].prime;
    const std::uint32_t e = f[1].exponent;
    const bool q_mersenne = std::has_single_bit(q + 1);
    const auto mersenne_exponent = static_cast<std::uint32_t>(std::countr_zero(q + 1));
    const bool exponent_prime = mersenne_exponent >= 2 && is_prime_u64(mersenne_exponent);

    if (e == 1 && a + 1 < 64) {
        const std::uint64_t two_t = std::uint64_t{1} << (a + 1);
        if (two_t > q + 1 && std::has_single_bit(two_t - 1 - q)) return 1;
    }
    if (e == 1 && q_mersenne && exponent_prime && a == 2 * mersenne_exponent - 1) return 2;
    if (e == 2 && q_mersenne && exponent_prime && a == mersenne_exponent - 1) return 3;
    return std::nullopt;
}

std::string join_semicolon(std::span<const std::uint64_t> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace sigmakit
