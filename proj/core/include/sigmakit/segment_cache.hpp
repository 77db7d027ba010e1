// segment_cache.hpp
// On-disk cache of sieve segments.
//
// File layout (all integers little-endian):
//   magic "ALQ1" | u32 version | u64 lo | u64 hi
//   (hi - lo + 1) records of
//     u64 sigma | u32 tau | u64 phi | i8 mu | u8 omega | u8 Omega | u64 p_plus | u64 spf
//   u64 checksum (FNV-1a 64 over every preceding byte)
//
// A missing, truncated or corrupt file is a cache miss, never an error.

#pragma once

#include "sigmakit/sieve.hpp"

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace sigmakit {

inline constexpr std::uint32_t kSegmentCacheVersion = 1;

[[nodiscard]] std::string encode_segment(const SieveSegment& segment);
[[nodiscard]] std::optional<SieveSegment> decode_segment(const std::string& bytes);

void write_segment_file(const std::filesystem::path& path, const SieveSegment& segment);
[[nodiscard]] std::optional<SieveSegment> read_segment_file(const std::filesystem::path& path);

[[nodiscard]] std::uint64_t fnv1a64(const void* data, std::size_t length,
                                    std::uint64_t seed = 0xcbf29ce484222325ULL);

class SegmentCache {
public:
    explicit SegmentCache(std::filesystem::path dir);

    /// Loads [lo, hi] from disk if a valid file exists, otherwise sieves and
    /// stores it. Safe to call concurrently for disjoint ranges.
    [[nodiscard]] SieveSegment load_or_compute(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config);

    [[nodiscard]] std::filesystem::path path_for(std::uint64_t lo, std::uint64_t hi) const;
    [[nodiscard]] std::uint64_t hits() const { return hits_.load(); }
    [[nodiscard]] std::uint64_t misses() const { return misses_.load(); }

private:
    std::filesystem::path dir_;
    std::atomic<std::uint64_t> hits_{0};
    std::atomic<std::uint64_t> misses_{0};
};

}  // namespace sigmakit
