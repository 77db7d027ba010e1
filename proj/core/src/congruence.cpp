#include "sigmakit/congruence.hpp"

#include "sigmakit/checked.hpp"

#include <memory>

namespace sigmakit {

std::string to_string(SolutionKind kind) {
    switch (kind) {
        case SolutionKind::Regular: return "regular";
        case SolutionKind::Sporadic: return "sporadic";
        case SolutionKind::NotASolution: return "none";
    }
    return "none";
}

bool solves_congruence(std::uint64_t n, std::int64_t k, std::uint64_t b, std::uint64_t sigma_n) {
    const i128 value = static_cast<i128>(b) * static_cast<i128>(sigma_n) - static_cast<i128>(k);
    return value % static_cast<i128>(n) == 0;
}

CongruenceClassification classify(std::uint64_t n, std::int64_t k, std::uint64_t b, std::uint64_t sigma_n,
                                  const Factorization& factors) {
    CongruenceClassification out{n, k, b, SolutionKind::NotASolution, std::nullopt};
    if (!solves_congruence(n, k, b, sigma_n)) return out;
    out.kind = SolutionKind::Sporadic;
    if (k <= 0 || static_cast<std::uint64_t>(k) % b != 0) return out;
    const std::uint64_t target = static_cast<std::uint64_t>(k) / b;
    // factors are ascending, so the first qualifying p is the smallest
    for (const auto& [p, e] : factors) {
        if (e != 1) continue;
        const std::uint64_t m = n / p;
        const std::uint64_t sigma_m = sigma_n / (p + 1);
        if (sigma_m != target) continue;
        if (static_cast<u128>(b) * sigma_m % m != 0) continue;
        out.kind = SolutionKind::Regular;
        out.regular = RegularDecomposition{p, m};
        return out;
    }
    return out;
}

CongruenceClassification classify(std::uint64_t n, std::int64_t k, std::uint64_t b) {
    const auto factors = factor_trial(n);
    return classify(n, k, b, sigma_from(factors), factors);
}

void for_each_solution(std::uint64_t x, std::int64_t k, std::uint64_t b, const ScanOptions& options,
                       const std::function<void(const CongruenceClassification&)>& fn) {
    if (x == 0) return;
    if (b == 0) throw std::invalid_argument("b must be positive");
    const std::uint64_t table = std::min<std::uint64_t>(x, std::uint64_t{1} << 24);
    const Factorizer factorizer(table);
    for_each_segment_ordered(
        1, x, options,
        [&](const SieveSegment& segment) {
            std::vector<CongruenceClassification> found;
            for (const auto& r : segment.records) {
                if (!solves_congruence(r.n, k, b, r.sigma)) continue;
                found.push_back(classify(r.n, k, b, r.sigma, factorizer.factor(r.n)));
            }
            return found;
        },
        [&](std::vector<CongruenceClassification>&& found) {
            for (const auto& c : found) fn(c);
        });
}

std::vector<std::uint64_t> enumerate_sporadic(std::uint64_t x, std::int64_t k, std::uint64_t b,
                                              const ScanOptions& options, std::size_t max_results) {
    std::vector<std::uint64_t> out;
    for_each_solution(x, k, b, options, [&](const CongruenceClassification& c) {
        if (c.kind != SolutionKind::Sporadic) return;
        if (out.size() >= max_results)
            throw BudgetExceeded("more than " + std::to_string(max_results) + " sporadic solutions; use streaming mode");
        out.push_back(c.n);
    });
    return out;
}

std::vector<CongruenceClassification> enumerate_regular(std::uint64_t x, std::int64_t k, std::uint64_t b,
                                                        const ScanOptions& options, std::size_t max_results) {
    std::vector<CongruenceClassification> out;
    for_each_solution(x, k, b, options, [&](const CongruenceClassification& c) {
        if (c.kind != SolutionKind::Regular) return;
        if (out.size() >= max_results)
            throw BudgetExceeded("more than " + std::to_string(max_results) + " regular solutions; use streaming mode");
        out.push_back(c);
    });
    return out;
}

}  // namespace sigmakit
