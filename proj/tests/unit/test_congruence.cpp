#include "sigmakit/congruence.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace sigmakit;

TEST(Congruence, ClassifyMatchesBruteForce) {
    for (std::uint64_t b : {1ull, 2ull, 3ull})
        for (std::int64_t k = -20; k <= 20; ++k)
            for (std::uint64_t n = 1; n <= 1500; ++n) {
                const auto c = classify(n, k, b);
                if (!oracle::solves(n, k, b)) {
                    ASSERT_EQ(c.kind, SolutionKind::NotASolution) << n << " " << k << " " << b;
                    continue;
                }
                const auto p = oracle::regular_prime(n, k, b);
                if (p) {
                    ASSERT_EQ(c.kind, SolutionKind::Regular) << n << " " << k << " " << b;
                    ASSERT_TRUE(c.regular.has_value());
                    EXPECT_EQ(c.regular->p, *p);
                    EXPECT_EQ(c.regular->m, n / *p);
                } else {
                    ASSERT_EQ(c.kind, SolutionKind::Sporadic) << n << " " << k << " " << b;
                    EXPECT_FALSE(c.regular.has_value());
                }
            }
}

TEST(Congruence, EnumerationsPartitionSolutions) {
    const std::uint64_t x = 3000;
    for (std::int64_t k : {-7, -1, 0, 1, 4, 12, 24, 56}) {
        std::vector<std::uint64_t> sporadic, regular;
        for (std::uint64_t n = 1; n <= x; ++n) {
            if (!oracle::solves(n, k, 1)) continue;
            (oracle::regular_prime(n, k, 1) ? regular : sporadic).push_back(n);
        }
        ScanOptions opts;
        opts.threads = 2;
        opts.segment_length = 512;
        EXPECT_EQ(enumerate_sporadic(x, k, 1, opts), sporadic) << k;
        std::vector<std::uint64_t> got;
        for (const auto& c : enumerate_regular(x, k, 1, opts)) got.push_back(c.n);
        EXPECT_EQ(got, regular) << k;
    }
}

TEST(Congruence, SixPIsRegularForTwelve) {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 9973ull}) {
        const auto c = classify(6 * p, 12);
        ASSERT_EQ(c.kind, SolutionKind::Regular);
        EXPECT_EQ(c.regular->m, 6u);
        EXPECT_EQ(c.regular->p, p);
    }
    // p = 2, 3 divide 6, so 12 and 18 are not of the regular shape with m = 6
    EXPECT_NE(classify(18, 12).kind, SolutionKind::Regular);
}

TEST(Congruence, NonPositiveKIsSporadic) {
    EXPECT_EQ(classify(6, 0).kind, SolutionKind::Sporadic);
    EXPECT_EQ(classify(8, -1).kind, SolutionKind::Sporadic);
    EXPECT_EQ(classify(5, 3, 2).kind, SolutionKind::NotASolution);
    EXPECT_EQ(to_string(SolutionKind::Regular), "regular");
    EXPECT_EQ(to_string(SolutionKind::NotASolution), "none");
}

TEST(Congruence, BudgetExceeded) {
    EXPECT_THROW((void)enumerate_sporadic(10000, 0, 1, {}, 3), BudgetExceeded);
}

TEST(Congruence, StreamingIsOrdered) {
    ScanOptions opts;
    opts.threads = 3;
    opts.segment_length = 100;
    std::vector<std::uint64_t> seen;
    for_each_solution(5000, 12, 1, opts, [&](const CongruenceClassification& c) { seen.push_back(c.n); });
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    std::vector<std::uint64_t> want;
    for (std::uint64_t n = 1; n <= 5000; ++n)
        if (oracle::solves(n, 12, 1)) want.push_back(n);
    EXPECT_EQ(seen, want);
}
