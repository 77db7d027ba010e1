#include "sigmakit/sieve.hpp"

#include "sigmakit/checked.hpp"
#include "sigmakit/primes.hpp"

#include <string>

namespace sigmakit {

const ArithmeticRecord& SieveSegment::at(std::uint64_t n) const {
    if (n < lo || n > hi) throw std::out_of_range("SieveSegment::at: " + std::to_string(n) + " outside segment");
    return records[n - lo];
}

namespace {

// Multiplicative contribution of p^e: sigma factor, phi factor, exponent.
struct PowerFactor {
    std::uint64_t power;
    std::uint64_t sigma;
    std::uint64_t phi;
    std::uint32_t exponent;
};

ArithmeticRecord unit_record(std::uint64_t n) {
    ArithmeticRecord r;
    r.n = n;
    r.sigma = 1;
    r.tau = 1;
    r.mu = 1;
    r.phi = 1;
    r.p_plus = 1;
    r.spf = 1;
    return r;
}

void apply_prime_power(ArithmeticRecord& r, std::uint64_t p, const PowerFactor& f) {
    r.sigma = checked_mul(r.sigma, f.sigma);
    r.tau *= f.exponent + 1;
    r.phi = checked_mul(r.phi, f.phi);
    r.mu = f.exponent == 1 ? static_cast<std::int8_t>(-r.mu) : std::int8_t{0};
    r.small_omega += 1;
    r.big_omega = static_cast<std::uint8_t>(r.big_omega + f.exponent);
    if (r.spf == 1) r.spf = p;
    r.p_plus = p;
}

}  // namespace

SieveSegment sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config) {
    if (lo == 0) throw std::invalid_argument("sieve_range: lo must be >= 1");
    if (lo > hi) throw std::invalid_argument("sieve_range: lo > hi");
    if (hi > config.global_bound)
        throw std::out_of_range("sieve_range: hi = " + std::to_string(hi) + " exceeds global bound " +
                                std::to_string(config.global_bound));
    const std::uint64_t length = hi - lo + 1;
    if (length > config.max_segment_length)
        throw RangeTooLarge("sieve_range: " + std::to_string(length) + " records exceed the segment budget of " +
                            std::to_string(config.max_segment_length));

    SieveSegment segment;
    segment.lo = lo;
    segment.hi = hi;
    segment.records.resize(length);
    std::vector<std::uint64_t> factored(length, 1);
    std::vector<std::uint64_t> owner(length, 0);
    for (std::uint64_t i = 0; i < length; ++i) segment.records[i] = unit_record(lo + i);

    std::vector<PowerFactor> levels;
    for (std::uint64_t p : primes_up_to(isqrt(hi))) {
        // levels[j] describes p^(j+1)
        levels.clear();
        std::uint64_t q = p;
        std::uint64_t sigma = 1 + p;
        std::uint64_t prev = 1;
        for (std::uint32_t e = 1;; ++e) {
            levels.push_back({q, sigma, q - prev, e});
            if (q > hi / p) break;
            prev = q;
            q *= p;
            sigma += q;
        }
        // Highest power first; the owner mark keeps lower levels from
        // re-applying p to the same n.
        for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
            const std::uint64_t step = it->power;
            std::uint64_t first = (lo + step - 1) / step * step;
            for (std::uint64_t m = first; m <= hi; m += step) {
                const std::uint64_t i = m - lo;
                if (owner[i] == p) continue;
                owner[i] = p;
                apply_prime_power(segment.records[i], p, *it);
                factored[i] *= step;
            }
        }
    }
    for (std::uint64_t i = 0; i < length; ++i) {
        const std::uint64_t rest = (lo + i) / factored[i];
        if (rest > 1) apply_prime_power(segment.records[i], rest, PowerFactor{rest, rest + 1, rest - 1, 1});
    }
    return segment;
}

std::vector<ArithmeticRecord> linear_sieve(std::uint64_t limit) {
    if (limit > 0xffffffffULL) throw std::out_of_range("linear_sieve: limit exceeds 2^32");
    std::vector<ArithmeticRecord> rec(limit + 1);
    // For each n: the power of spf(n) dividing n and the matching partial sum
    // 1 + p + ... + p^e, so sigma(n*p) for p = spf(n) follows without
    // refactoring.
    std::vector<std::uint64_t> spf_power(limit + 1, 1);
    std::vector<std::uint64_t> spf_sum(limit + 1, 1);
    std::vector<std::uint64_t> primes;
    if (limit >= 1) rec[1] = unit_record(1);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        ArithmeticRecord& r = rec[i];
        if (r.n == 0) {
            r = unit_record(i);
            apply_prime_power(r, i, PowerFactor{i, i + 1, i - 1, 1});
            spf_power[i] = i;
            spf_sum[i] = i + 1;
            primes.push_back(i);
        }
        for (std::uint64_t p : primes) {
            if (p > r.spf || i * p > limit) break;
            const std::uint64_t m = i * p;
            ArithmeticRecord& t = rec[m];
            if (p < r.spf) {
                // p does not divide i: multiplicative step
                t = r;
                t.n = m;
                t.sigma = checked_mul(r.sigma, p + 1);
                t.tau = r.tau * 2;
                t.phi = checked_mul(r.phi, p - 1);
                t.mu = static_cast<std::int8_t>(-r.mu);
                t.small_omega = static_cast<std::uint8_t>(r.small_omega + 1);
                t.big_omega = static_cast<std::uint8_t>(r.big_omega + 1);
                t.spf = p;
                spf_power[m] = p;
                spf_sum[m] = p + 1;
            } else {
                // p = spf(i): raise the exponent of p by one
                const std::uint64_t pe = spf_power[i] * p;
                const std::uint64_t se = spf_sum[i] + pe;
                const std::uint64_t cofactor_sigma = r.sigma / spf_sum[i];
                std::uint32_t e = 0;
                for (std::uint64_t x = pe; x > 1; x /= p) ++e;
                t = r;
                t.n = m;
                t.sigma = checked_mul(cofactor_sigma, se);
                t.tau = r.tau / e * (e + 1);
                t.phi = checked_mul(r.phi, p);
                t.mu = 0;
                t.big_omega = static_cast<std::uint8_t>(r.big_omega + 1);
                spf_power[m] = pe;
                spf_sum[m] = se;
                break;
            }
        }
    }
    rec.erase(rec.begin());
    return rec;
}

}  // namespace sigmakit
