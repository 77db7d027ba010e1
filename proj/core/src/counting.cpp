#include "sigmakit/counting.hpp"

#include <stdexcept>

namespace sigmakit {

std::uint64_t count_smooth(std::uint64_t x, std::uint64_t y, const ScanOptions& options) {
    if (y < 2) throw std::invalid_argument("count_smooth: y must be >= 2");
    if (x == 0) return 0;
    return count_records(1, x, options, [y](const ArithmeticRecord& r) { return r.p_plus <= y; });
}

std::uint64_t count_omega(std::uint32_t r, std::uint64_t x, const ScanOptions& options) {
    if (x == 0) return 0;
    return count_records(1, x, options, [r](const ArithmeticRecord& rec) { return rec.big_omega == r; });
}

std::vector<std::uint64_t> omega_histogram(std::uint64_t x, const ScanOptions& options) {
    std::vector<std::uint64_t> hist;
    if (x == 0) return hist;
    auto parts = map_segments(1, x, options, [](const SieveSegment& segment) {
        std::vector<std::uint64_t> h;
        for (const auto& r : segment.records) {
            if (r.big_omega >= h.size()) h.resize(r.big_omega + 1, 0);
            ++h[r.big_omega];
        }
        return h;
    });
    for (const auto& h : parts) {
        if (h.size() > hist.size()) hist.resize(h.size(), 0);
        for (std::size_t i = 0; i < h.size(); ++i) hist[i] += h[i];
    }
    return hist;
}

std::uint64_t count_squarefree(std::uint64_t x, const ScanOptions& options) {
    if (x == 0) return 0;
    return count_records(1, x, options, [](const ArithmeticRecord& r) { return r.mu != 0; });
}

}  // namespace sigmakit
