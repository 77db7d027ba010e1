// acceptance.cpp
// One PASS/FAIL line per acceptance criterion. Every criterion runs at one
// thread and again at several; criterion 11 compares the two fingerprints.

#include "sigmakit/admissible.hpp"
#include "sigmakit/congruence.hpp"
#include "sigmakit/densities.hpp"
#include "sigmakit/divisors.hpp"
#include "sigmakit/primes.hpp"
#include "sigmakit/near_perfect.hpp"
#include "sigmakit/report.hpp"
#include "sigmakit/within.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

using namespace sigmakit;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> notes;
    std::string fingerprint;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string list(const std::vector<std::uint64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

// -- 1 -------------------------------------------------------------------------

// k(y) = y^0.9 .. y^0.2 down the rows; x = 1e6, 1e7, 2e7 across
constexpr double kTable1[8][3] = {
    {3.661860, 3.305180, 3.196040}, {1.141480, 0.945623, 0.908751}, {0.494278, 0.435395, 0.426470},
    {0.311567, 0.274586, 0.267904}, {0.276559, 0.259482, 0.255962}, {0.264968, 0.252956, 0.250063},
    {0.225980, 0.247837, 0.247299}, {0.151238, 0.195911, 0.197430},
};
constexpr double kTable1Loose = 0.002;
constexpr double kTable1Tight = 0.0005;
constexpr int kTable1TightNeeded = 20;
constexpr double kTable1Seconds = 600;

Outcome table1(const ScanOptions& opts) {
    const auto t0 = Clock::now();
    const std::uint64_t cps[] = {1'000'000, 10'000'000, 20'000'000};
    std::vector<ThresholdSpec> ks;
    for (int tenth = 9; tenth >= 2; --tenth) ks.push_back(ThresholdSpec::power(Fraction::make(tenth, 10)));
    const auto grid = count_within_grid(cps, Ell{}, ks, opts);
    const double secs = seconds_since(t0);

    Outcome o;
    int loose = 0, tight = 0;
    double worst = 0;
    for (std::size_t t = 0; t < 8; ++t)
        for (std::size_t c = 0; c < 3; ++c) {
            const std::string cell = format_fixed(normalized_count(grid[t][c], cps[c]), 6);
            o.fingerprint += cell + ",";
            const double diff = std::abs(std::stod(cell) - kTable1[t][c]);
            worst = std::max(worst, diff);
            loose += diff <= kTable1Loose;
            tight += diff <= kTable1Tight;
            if (diff > kTable1Tight)
                o.notes.push_back(ks[t].to_string() + " x=" + std::to_string(cps[c]) + ": " + cell + " vs " +
                                  fmt("%.6f", kTable1[t][c]));
        }
    o.pass = loose == 24 && tight >= kTable1TightNeeded && secs <= kTable1Seconds;
    o.summary = std::to_string(loose) + "/24 within 0.002, " + std::to_string(tight) + "/24 within 0.0005, max |diff| " +
                fmt("%.6f", worst) + ", " + fmt("%.1f s", secs);
    return o;
}

// -- 2 -------------------------------------------------------------------------

Outcome spikes(const ScanOptions& opts) {
    const auto s = spike_scan(1'000'000, 2, 1, 100, opts);
    const auto ranked = rank_spikes(s);
    Outcome o;
    for (const auto& r : s) o.fingerprint += std::to_string(r.k) + ":" + std::to_string(r.count) + ",";
    const std::uint64_t at12 = s[11].count;
    const std::uint64_t floor12 = oracle::prime_pi(166'666) - 2;
    o.pass = ranked[0].k == 12 && ranked[1].k == 56 && at12 >= floor12;
    o.summary = "top k = " + std::to_string(ranked[0].k) + " (" + std::to_string(ranked[0].count) + "), second k = " +
                std::to_string(ranked[1].k) + " (" + std::to_string(ranked[1].count) + "); count(12) " +
                std::to_string(at12) + " >= pi(166666) - 2 = " + std::to_string(floor12);
    return o;
}

// -- 3 -------------------------------------------------------------------------

struct Table2Row {
    std::uint64_t x, e12, e1, e2;
};
constexpr Table2Row kTable2[] = {
    {100, 5, 7, 14}, {1000, 6, 15, 48}, {10'000, 8, 21, 143}, {100'000, 9, 33, 301}, {1'000'000, 11, 45, 571},
};

Outcome table2(const ScanOptions& opts) {
    std::vector<std::uint64_t> cps;
    for (const auto& r : kTable2) cps.push_back(r.x);
    const auto rows = exact_intersection_grid(cps, 1, 2, {}, opts);
    Outcome o;
    int exact = 0;
    bool offset_only = true;
    std::uint64_t undecided = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto perfect = static_cast<std::int64_t>(even_perfect(r.x).size());
        o.fingerprint += std::to_string(r.both) + "," + std::to_string(r.first) + "," + std::to_string(r.second) + ";";
        undecided += r.undecided;
        const std::pair<std::uint64_t, std::uint64_t> cells[] = {
            {r.both, kTable2[i].e12}, {r.first, kTable2[i].e1}, {r.second, kTable2[i].e2}};
        const char* names[] = {"E12", "E1", "E2"};
        for (int c = 0; c < 3; ++c) {
            const auto got = static_cast<std::int64_t>(cells[c].first);
            const auto want = static_cast<std::int64_t>(cells[c].second);
            if (got == want) {
                ++exact;
                continue;
            }
            if (std::abs(got - want) != perfect) offset_only = false;
            o.notes.push_back(std::string(names[c]) + "(" + std::to_string(r.x) + ") = " + std::to_string(got) +
                              ", table has " + std::to_string(want) + " (diff " + std::to_string(want - got) +
                              ", perfect numbers <= x: " + std::to_string(perfect) + ")");
        }
    }
    o.pass = undecided == 0 && (exact == 15 || offset_only);
    o.summary = std::to_string(exact) + "/15 entries exact";
    if (exact != 15) o.summary += offset_only ? ", remaining differ by the perfect-number count" : ", offset is not the perfect-number count";

    if (exact != 15) {
        SearchBudget all;
        all.pool = ExceptionPool::AllDivisors;
        std::string diag = "with n itself allowed as an exception: E2 =";
        for (const auto& r : exact_intersection_grid(cps, 1, 2, all, opts)) diag += " " + std::to_string(r.second);
        o.notes.push_back(diag + " (E1, E12 under that reading differ from the table)");
    }
    return o;
}

// -- 4 -------------------------------------------------------------------------

Outcome near_prefix(const ScanOptions& opts) {
    const std::vector<std::uint64_t> want{6, 12, 18, 20, 24, 28, 40, 88, 104, 196, 224, 234};
    const auto got = census_near(234, 1, {}, opts).members;
    Outcome o;
    o.fingerprint = list(got);
    o.pass = got == want;
    o.summary = "N(1) up to 234 = " + list(got);
    if (!o.pass) {
        for (auto m : got)
            if (std::find(want.begin(), want.end(), m) == want.end()) {
                const auto p = profile(m);
                o.notes.push_back("extra member " + std::to_string(m) + ": sigma - 2n = " + std::to_string(p.abundance) +
                                  ", witness " + list(p.witnesses.begin()->second));
            }
        for (auto m : want)
            if (std::find(got.begin(), got.end(), m) == got.end()) o.notes.push_back("missing " + std::to_string(m));
    }
    return o;
}

// -- 5 -------------------------------------------------------------------------

Outcome structural(const ScanOptions& opts) {
    Outcome o;
    const auto s4 = solve_structured_m(4, 3, 1'000'000, {}, opts);
    const auto s6 = solve_structured_m(6, 1, 1'000'000, {}, opts);
    const auto s8 = solve_structured_m(8, 1, 1'000'000, {}, opts);
    const bool sets = s4 == std::vector<std::uint64_t>{6} && s6 == std::vector<std::uint64_t>{12, 18, 20, 28} &&
                      s8 == std::vector<std::uint64_t>{24, 40, 56, 88, 104};
    if (!sets) o.notes.push_back("tau=4: " + list(s4) + " tau=6: " + list(s6) + " tau=8: " + list(s8));

    std::uint64_t prime_powers = 0, near_prime_powers = 0;
    for (std::uint64_t p : primes_up_to(1'000'000))
        for (std::uint64_t q = p; q <= 1'000'000; q *= p) {
            ++prime_powers;
            const auto pr = profile(q);
            if (pr.min_exceptions.kind != MinExceptions::Kind::Infinite) {
                ++near_prime_powers;
                o.notes.push_back("prime power " + std::to_string(q) + " has " + pr.min_exceptions.to_string(16));
            }
        }

    std::uint64_t two_prime = 0, unmatched = 0;
    const auto members = census_near(1'000'000, 1, {}, opts).members;
    for (std::uint64_t m : members) {
        const auto f = factor_trial(m);
        if (f.size() != 2 || sigma_from(f) == 2 * m) continue;
        ++two_prime;
        if (!two_prime_near_perfect_form(m)) {
            ++unmatched;
            o.notes.push_back("two-prime member without a form: " + std::to_string(m));
        }
    }
    o.fingerprint = list(s4) + list(s6) + list(s8) + std::to_string(near_prime_powers) + list(members);
    o.pass = sets && near_prime_powers == 0 && unmatched == 0;
    o.summary = std::string("structured m-sets ") + (sets ? "match" : "differ") + "; " + std::to_string(prime_powers) +
                " prime powers, " + std::to_string(near_prime_powers) + " near-perfect; " + std::to_string(two_prime) +
                " non-perfect two-prime members of N(1), " + std::to_string(unmatched) + " without a form";
    return o;
}

// -- 6 -------------------------------------------------------------------------

Outcome constants(const ScanOptions& opts) {
    const char* want[] = {"1/6", "1/6", "17/84", "493/1260", "493/1260", "179017/360360"};
    Outcome o;
    int ok = 0;
    for (std::uint32_t k = 4; k <= 9; ++k) {
        const auto c = constant_c_k(k, 1'000'000, {}, opts);
        const auto s = c.value.to_fraction_string();
        o.fingerprint += s + list(c.m_set);
        o.summary += (k > 4 ? " " : "") + std::string("c_") + std::to_string(k) + "=" + s;
        if (s == want[k - 4]) {
            ++ok;
        } else {
            o.notes.push_back("c_" + std::to_string(k) + " from " + list(c.m_set) + " expected " + want[k - 4]);
        }
    }
    o.pass = ok == 6;
    return o;
}

// -- 7 -------------------------------------------------------------------------

constexpr double kMRelTol = 1e-9;

Outcome admissible(const ScanOptions& opts) {
    Outcome o;
    const std::vector<std::uint64_t> expected_b{6, 12, 18, 24, 224};
    const auto greedy = greedy_admissible(1, 234, {}, opts);
    const bool greedy_ok = greedy.members == expected_b;

    const auto bound = m_lower_bound({1, expected_b});
    const long double pi = 3.141592653589793238462643383279502884L;
    const long double expected = 4981.0L / (7056.0L * pi * pi);
    const double rel = static_cast<double>(std::abs((bound.value - expected) / expected));
    const bool exact_ok = bound.phi_sum * ExactRational(6, 1) == ExactRational(4981, 7056);
    const bool bound_ok = exact_ok && rel <= kMRelTol;

    o.fingerprint = list(greedy.members) + bound.decimal;
    o.pass = greedy_ok && bound_ok;
    o.summary = "greedy(1, 234) = " + list(greedy.members) + (greedy_ok ? "" : " (expected {6,12,18,24,224})") +
                "; M bound of {6,12,18,24,224} = 6*" + bound.phi_sum.to_fraction_string() + "/pi^2 = " + bound.decimal +
                ", rel err " + fmt("%.2e", rel);
    if (!greedy_ok) {
        for (auto m : greedy.members)
            if (std::find(expected_b.begin(), expected_b.end(), m) == expected_b.end()) {
                std::string why = std::to_string(m) + " is in N(1) and its family is disjoint from those of";
                for (auto b : expected_b) why += " " + std::to_string(b) + (disjoint_families(m, b) ? "" : "(no)");
                o.notes.push_back(why);
            }
    }
    return o;
}

// -- 8 -------------------------------------------------------------------------

Outcome reciprocal_perfect(const ScanOptions& opts) {
    const auto t0 = Clock::now();
    const auto s = sum_inverse_perfect(100'000'000, 2, opts);
    const double secs = seconds_since(t0);
    const std::vector<std::uint64_t> want{6, 28, 496, 8128, 33550336};
    Outcome o;
    o.fingerprint = list(s.members) + s.exact.to_fraction_string();
    const bool in_range = s.value >= 0.2045 && s.value <= 0.2046;
    const bool members = s.members == want && even_perfect(100'000'000) == s.members;
    o.pass = in_range && members && secs <= 900;
    o.summary = "sum = " + s.exact.to_decimal(8) + " over " + list(s.members) + ", Mersenne route " +
                (even_perfect(100'000'000) == s.members ? "agrees" : "differs") + ", " + fmt("%.1f s", secs);
    return o;
}

// -- 9 -------------------------------------------------------------------------

Outcome abundant_density(const ScanOptions& opts) {
    const Fraction two[] = {Fraction::make(2, 1)};
    const auto d = empirical_distribution(10'000'000, two, opts);
    const ExactRational share(static_cast<std::int64_t>(d.x - d.points[0].count), d.x);
    const double v = share.to_double();
    Outcome o;
    o.fingerprint = share.to_fraction_string();
    o.pass = v >= 0.2465 && v <= 0.2485;
    o.summary = "1 - D(2) at 1e7 = " + share.to_decimal(6) + " (band [0.2465, 0.2485])";
    return o;
}

// -- 10 ------------------------------------------------------------------------

// sizes of subsets summing to target, by Gray-code enumeration of all subsets
std::vector<std::uint32_t> enumerate_all(const std::vector<std::uint64_t>& d, std::uint64_t target) {
    std::vector<char> hit(d.size() + 1, 0);
    std::uint64_t sum = 0;
    unsigned size = 0;
    if (target == 0) hit[0] = 1;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << d.size()); ++i) {
        const int bit = __builtin_ctzll(i);
        const bool on = ((i ^ (i >> 1)) >> bit) & 1;
        if (on) {
            sum += d[bit];
            ++size;
        } else {
            sum -= d[bit];
            --size;
        }
        if (sum == target) hit[size] = 1;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < hit.size(); ++c)
        if (hit[c]) out.push_back(c);
    return out;
}

Outcome oracle_suites(const ScanOptions& opts) {
    Outcome o;
    const std::uint64_t x = 10'000;

    // (a) profile vs exhaustive subset sums
    SearchBudget wide;
    wide.k_cap = 64;
    wide.node_limit = 1'000'000'000;
    std::uint64_t profile_bad = 0, enumerated = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        const auto p = profile(n, wide);
        o.fingerprint += p.min_exceptions.to_string(64) + ";";
        auto d = oracle::divisors(n);
        d.pop_back();
        const std::uint64_t s = oracle::sigma(n);
        std::vector<std::uint32_t> want;
        if (s >= 2 * n) {
            if (d.size() <= 19) {
                want = enumerate_all(d, s - 2 * n);
                ++enumerated;
            } else {
                const auto sizes = oracle::achievable_sizes(n);
                want.assign(sizes.begin(), sizes.end());
            }
        }
        if (want != p.achievable) {
            ++profile_bad;
            if (profile_bad <= 5) o.notes.push_back("profile mismatch at " + std::to_string(n));
        }
    }

    // (b) phase-density identity on random triples
    std::mt19937_64 rng(0x51636d61);
    int identity_bad = 0;
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t xx = 2 + rng() % (100'000 - 1);
        const Ell ell = Ell::make(1 + rng() % 3, 1);
        const std::uint64_t den = 1 + rng() % 20;
        const Fraction c = Fraction::make(1 + rng() % (3 * den), den);
        const auto pd = phase_density(xx, ell, c, opts);
        o.fingerprint += std::to_string(pd.count) + ",";
        if (!pd.identity_check) {
            ++identity_bad;
            o.notes.push_back("identity fails at x=" + std::to_string(xx) + " ell=" + ell.to_string() + " c=" + c.to_string());
        }
    }

    // (c) congruence classification vs brute force
    std::vector<std::uint64_t> sig(x + 1);
    for (std::uint64_t n = 1; n <= x; ++n) sig[n] = oracle::sigma(n);
    std::uint64_t congruence_bad = 0;
    for (std::int64_t k = -20; k <= 20; ++k) {
        std::vector<std::uint64_t> sporadic;
        for (std::uint64_t n = 1; n <= x; ++n) {
            const __int128 v = static_cast<__int128>(sig[n]) - k;
            const bool solves = v % static_cast<__int128>(n) == 0;
            std::optional<std::uint64_t> p;
            if (solves && k > 0)
                for (const auto& f : oracle::factor(n))
                    if (f.e == 1 && sig[n / f.p] == static_cast<std::uint64_t>(k) && sig[n / f.p] % (n / f.p) == 0) {
                        p = f.p;
                        break;
                    }
            const auto c = classify(n, k);
            const SolutionKind want = !solves ? SolutionKind::NotASolution : p ? SolutionKind::Regular : SolutionKind::Sporadic;
            if (c.kind != want || (p && c.regular->p != *p)) ++congruence_bad;
            if (solves && !p) sporadic.push_back(n);
        }
        const auto got = enumerate_sporadic(x, k, 1, opts);
        o.fingerprint += list(got);
        if (got != sporadic) {
            ++congruence_bad;
            o.notes.push_back("enumerate_sporadic differs at k=" + std::to_string(k));
        }
    }

    // (d) counting lemma
    std::uint64_t lemma_bad = 0;
    for (std::uint32_t k = 0; k <= 9; ++k) {
        const auto v = verify_counting_lemma(x, k, {}, opts);
        lemma_bad += v.size();
        o.fingerprint += std::to_string(v.size()) + ",";
        for (std::size_t i = 0; i < v.size() && i < 3; ++i)
            o.notes.push_back("lemma k=" + std::to_string(k) + " n=" + std::to_string(v[i].n));
    }

    o.pass = profile_bad == 0 && identity_bad == 0 && congruence_bad == 0 && lemma_bad == 0;
    o.summary = "profile mismatches " + std::to_string(profile_bad) + "/" + std::to_string(x) + " (" +
                std::to_string(enumerated) + " by full enumeration), identity failures " +
                std::to_string(identity_bad) + "/50, congruence mismatches " + std::to_string(congruence_bad) +
                ", lemma violations " + std::to_string(lemma_bad);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome(const ScanOptions&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Table 1 normalized within-perfect counts", table1},
        {2, "almost-perfect spikes at 12 and 56", spikes},
        {3, "Table 2 exact-perfect counts", table2},
        {4, "N(1) prefix up to 234", near_prefix},
        {5, "structural lemmas", structural},
        {6, "constants c_4..c_9", constants},
        {7, "admissible set and M bound", admissible},
        {8, "sum of 1/m over perfect m <= 1e8", reciprocal_perfect},
        {9, "abundant density at 1e7", abundant_density},
        {10, "oracle equivalence suites", oracle_suites},
    };

    ScanOptions serial;
    serial.threads = 1;
    ScanOptions parallel = serial;
    parallel.threads = std::max(2u, std::thread::hardware_concurrency());

    int failures = 0;
    std::vector<std::string> fingerprints;
    auto report = [&](int id, const std::string& name, bool pass, const std::string& summary,
                      const std::vector<std::string>& notes) {
        std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), summary.c_str());
        for (const auto& n : notes) std::printf("       note: %s\n", n.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    };

    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run(serial);
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("threw: ") + e.what();
        }
        report(c.id, c.name, o.pass, o.summary, o.notes);
        fingerprints.push_back(o.fingerprint);
    }

    std::vector<std::string> diffs;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string again;
        try {
            again = criteria[i].run(parallel).fingerprint;
        } catch (const std::exception& e) {
            again = std::string("threw: ") + e.what();
        }
        if (again != fingerprints[i]) diffs.push_back("criterion " + std::to_string(criteria[i].id) + " differs");
    }
    report(11, "determinism at 1 vs " + std::to_string(parallel.threads) + " threads", diffs.empty(),
           std::to_string(criteria.size() - diffs.size()) + "/" + std::to_string(criteria.size()) +
               " criteria byte-identical",
           diffs);

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
