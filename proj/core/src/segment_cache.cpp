#include "sigmakit/segment_cache.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

namespace sigmakit {

namespace {

constexpr char kMagic[4] = {'A', 'L', 'Q', '1'};
constexpr std::size_t kHeaderBytes = 4 + 4 + 8 + 8;
constexpr std::size_t kRecordBytes = 8 + 4 + 8 + 1 + 1 + 1 + 8 + 8;

template <class T>
void put_le(std::string& out, T value) {
    using U = std::make_unsigned_t<T>;
    auto u = static_cast<U>(value);
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        out.push_back(static_cast<char>(u & 0xff));
        u = static_cast<U>(u >> 8);
    }
}

template <class T>
T get_le(const std::string& in, std::size_t& pos) {
    using U = std::make_unsigned_t<T>;
    U u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        u = static_cast<U>(u | (static_cast<U>(static_cast<unsigned char>(in[pos + i])) << (8 * i)));
    pos += sizeof(T);
    return static_cast<T>(u);
}

}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t length, std::uint64_t seed) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < length; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string encode_segment(const SieveSegment& segment) {
    std::string out;
    out.reserve(kHeaderBytes + segment.size() * kRecordBytes + 8);
    out.append(kMagic, 4);
    put_le<std::uint32_t>(out, kSegmentCacheVersion);
    put_le<std::uint64_t>(out, segment.lo);
    put_le<std::uint64_t>(out, segment.hi);
    for (const auto& r : segment.records) {
        put_le<std::uint64_t>(out, r.sigma);
        put_le<std::uint32_t>(out, r.tau);
        put_le<std::uint64_t>(out, r.phi);
        put_le<std::int8_t>(out, r.mu);
        put_le<std::uint8_t>(out, r.small_omega);
        put_le<std::uint8_t>(out, r.big_omega);
        put_le<std::uint64_t>(out, r.p_plus);
        put_le<std::uint64_t>(out, r.spf);
    }
    put_le<std::uint64_t>(out, fnv1a64(out.data(), out.size()));
    return out;
}

std::optional<SieveSegment> decode_segment(const std::string& bytes) {
    if (bytes.size() < kHeaderBytes + 8 || std::memcmp(bytes.data(), kMagic, 4) != 0) return std::nullopt;
    std::size_t pos = 4;
    if (get_le<std::uint32_t>(bytes, pos) != kSegmentCacheVersion) return std::nullopt;
    SieveSegment segment;
    segment.lo = get_le<std::uint64_t>(bytes, pos);
    segment.hi = get_le<std::uint64_t>(bytes, pos);
    if (segment.lo == 0 || segment.lo > segment.hi) return std::nullopt;
    const std::uint64_t count = segment.hi - segment.lo + 1;
    if (count > (bytes.size() - kHeaderBytes - 8) / kRecordBytes ||
        bytes.size() != kHeaderBytes + count * kRecordBytes + 8)
        return std::nullopt;

    std::size_t tail = bytes.size() - 8;
    if (get_le<std::uint64_t>(bytes, tail) != fnv1a64(bytes.data(), bytes.size() - 8)) return std::nullopt;

    segment.records.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        auto& r = segment.records[i];
        r.n = segment.lo + i;
        r.sigma = get_le<std::uint64_t>(bytes, pos);
        r.tau = get_le<std::uint32_t>(bytes, pos);
        r.phi = get_le<std::uint64_t>(bytes, pos);
        r.mu = get_le<std::int8_t>(bytes, pos);
        r.small_omega = get_le<std::uint8_t>(bytes, pos);
        r.big_omega = get_le<std::uint8_t>(bytes, pos);
        r.p_plus = get_le<std::uint64_t>(bytes, pos);
        r.spf = get_le<std::uint64_t>(bytes, pos);
    }
    return segment;
}

void write_segment_file(const std::filesystem::path& path, const SieveSegment& segment) {
    const std::string bytes = encode_segment(segment);
    // write-then-rename so readers never observe a partial file
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write segment cache file " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::optional<SieveSegment> read_segment_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_segment(bytes);
}

SegmentCache::SegmentCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path SegmentCache::path_for(std::uint64_t lo, std::uint64_t hi) const {
    return dir_ / ("seg_" + std::to_string(lo) + "_" + std::to_string(hi) + ".alq");
}

SieveSegment SegmentCache::load_or_compute(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config) {
    const auto path = path_for(lo, hi);
    if (auto cached = read_segment_file(path); cached && cached->lo == lo && cached->hi == hi) {
        ++hits_;
        return std::move(*cached);
    }
    ++misses_;
    SieveSegment segment = sieve_range(lo, hi, config);
    write_segment_file(path, segment);
    return segment;
}

}  // namespace sigmakit
