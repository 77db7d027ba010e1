#include "sigmakit/within.hpp"

#include "oracles.hpp"

#include <gmpxx.h>
#include <gtest/gtest.h>

#include <cmath>

using namespace sigmakit;

namespace {

// exact reference: |b sigma - a n| < b * k(n), decided with GMP or long double
bool oracle_within(std::uint64_t n, const Ell& ell, const ThresholdSpec& k) {
    const __int128 dev_signed = static_cast<__int128>(ell.b) * oracle::sigma(n) - static_cast<__int128>(ell.a) * n;
    const mpz_class dev(std::to_string(static_cast<long long>(dev_signed < 0 ? -dev_signed : dev_signed)));
    const mpz_class b(std::to_string(ell.b));
    const mpz_class nn(std::to_string(n));
    return std::visit(
        [&](const auto& t) -> bool {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, ConstantThreshold>) {
                return dev * mpz_class(std::to_string(t.c.den)) < b * mpz_class(std::to_string(t.c.num));
            } else if constexpr (std::is_same_v<T, LinearThreshold>) {
                return dev * mpz_class(std::to_string(t.c.den)) < b * mpz_class(std::to_string(t.c.num)) * nn;
            } else if constexpr (std::is_same_v<T, PowerThreshold>) {
                mpz_class lhs, rb, rn;
                mpz_pow_ui(lhs.get_mpz_t(), dev.get_mpz_t(), t.eps.den);
                mpz_pow_ui(rb.get_mpz_t(), b.get_mpz_t(), t.eps.den);
                mpz_pow_ui(rn.get_mpz_t(), nn.get_mpz_t(), t.eps.num);
                return lhs < rb * rn;
            } else {
                if (n == 1) return true;
                const long double l = static_cast<long double>(dev.get_d()) * std::log(static_cast<long double>(n));
                return l < static_cast<long double>(ell.b) * n;
            }
        },
        k.variant());
}

}  // namespace

TEST(ThresholdSpec, ParseAndPrint) {
    EXPECT_EQ(ThresholdSpec::parse("power:1/2").to_string(), "power:1/2");
    EXPECT_EQ(ThresholdSpec::parse("power:0.9").param_string(), "9/10");
    EXPECT_EQ(ThresholdSpec::parse("ylogy").kind_name(), "ylogy");
    EXPECT_EQ(ThresholdSpec::parse("const:3").kind_name(), "constant");
    EXPECT_EQ(ThresholdSpec::parse("linear:1/4").kind_name(), "linear");
    EXPECT_THROW((void)ThresholdSpec::parse("power:1"), std::invalid_argument);
    EXPECT_THROW((void)ThresholdSpec::parse("power:0"), std::invalid_argument);
    EXPECT_THROW((void)ThresholdSpec::parse("bogus:2"), std::invalid_argument);
}

TEST(Threshold, PowerComparisonIsExactAtTies) {
    // 8^(1/3) = 2 exactly; strict inequality must reject deviation 2
    EXPECT_FALSE(power_less(2, 1, 8, Fraction::make(1, 3)));
    EXPECT_TRUE(power_less(1, 1, 8, Fraction::make(1, 3)));
    EXPECT_TRUE(at_least_power(2, 8, Fraction::make(1, 3)));
    EXPECT_FALSE(at_least_power(1, 8, Fraction::make(1, 3)));
    // 10^6 ^ (1/2) = 1000
    EXPECT_FALSE(power_less(1000, 1, 1'000'000, Fraction::make(1, 2)));
    EXPECT_TRUE(power_less(999, 1, 1'000'000, Fraction::make(1, 2)));
}

class WithinOracle : public ::testing::TestWithParam<std::tuple<std::string, std::string>> {};

TEST_P(WithinOracle, CountMatchesBruteForce) {
    const Ell ell = Ell::parse(std::get<0>(GetParam()));
    const ThresholdSpec k = ThresholdSpec::parse(std::get<1>(GetParam()));
    const std::uint64_t x = 3000;
    std::uint64_t want = 0;
    std::vector<std::uint64_t> members;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (oracle_within(n, ell, k)) {
            ++want;
            if (members.size() < 10) members.push_back(n);
        }
    const auto got = count_within(x, ell, k, {}, 10);
    EXPECT_EQ(got.count, want);
    EXPECT_EQ(got.members_sample, members);
}

INSTANTIATE_TEST_SUITE_P(Grid, WithinOracle,
                         ::testing::Combine(::testing::Values("2", "3/2", "3", "5/2"),
                                            ::testing::Values("power:1/2", "power:9/10", "power:1/5", "ylogy",
                                                              "const:3", "linear:1/10")));

TEST(Within, GridMatchesSingleCounts) {
    const std::uint64_t cps[] = {10, 999, 5000, 12345};
    const ThresholdSpec ks[] = {ThresholdSpec::parse("power:7/10"), ThresholdSpec::parse("ylogy")};
    ScanOptions opts;
    opts.segment_length = 1000;
    opts.threads = 3;
    const auto grid = count_within_grid(cps, Ell{}, ks, opts);
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(grid[t][c], count_within(cps[c], Ell{}, ks[t]).count);
}

TEST(Within, RejectsTinyX) { EXPECT_THROW((void)count_within(1, Ell{}, ThresholdSpec::y_over_log_y()), std::invalid_argument); }

TEST(Within, TableOneCellAtMillion) {
    // y^0.5 at x = 10^6 is 0.276559
    const auto w = count_within(1'000'000, Ell{}, ThresholdSpec::power(Fraction::make(1, 2)));
    EXPECT_NEAR(w.normalized(), 0.276559, 5e-6);
}

TEST(Almost, SpikesMatchBruteForce) {
    const std::uint64_t x = 5000;
    const auto spikes = spike_scan(x, 2, -30, 30);
    ASSERT_EQ(spikes.size(), 61u);
    for (const auto& s : spikes) {
        std::uint64_t want = 0;
        for (std::uint64_t n = 1; n <= x; ++n)
            if (static_cast<std::int64_t>(oracle::sigma(n)) - 2 * static_cast<std::int64_t>(n) == s.k) ++want;
        EXPECT_EQ(s.count, want) << s.k;
        EXPECT_EQ(count_almost(x, 2, s.k), want);
    }
}

TEST(Almost, SmallCases) {
    const auto s = spike_scan(10, 2, 0, 0);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0], (SpikeCount{0, 1}));
    EXPECT_EQ(count_almost(1000, 2, 0), 3u);
}

TEST(Almost, RankOrdering) {
    const auto r = rank_spikes({{1, 5}, {2, 9}, {3, 5}, {-4, 9}});
    EXPECT_EQ(r[0].k, -4);
    EXPECT_EQ(r[1].k, 2);
    EXPECT_EQ(r[2].k, 1);
    EXPECT_EQ(r[3].k, 3);
}

TEST(PhaseDensity, IdentityAndCount) {
    for (const char* e : {"1", "2", "3", "3/2"})
        for (const char* c : {"1/10", "1/3", "1", "5/2"}) {
            const Ell ell = Ell::parse(e);
            const Fraction cf = Fraction::parse(c);
            const auto pd = phase_density(4000, ell, cf);
            EXPECT_TRUE(pd.identity_check) << e << " " << c;
            std::uint64_t want = 0;
            for (std::uint64_t n = 1; n <= 4000; ++n)
                if (oracle_within(n, ell, ThresholdSpec::linear(cf))) ++want;
            EXPECT_EQ(pd.count, want);
        }
}
