#include "schroder/rng.hpp"

#include <stdexcept>

namespace schroder {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
    std::uint64_t x = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    for (auto& w : s_) w = splitmix64(x);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t RngStream::nextU64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::nextUnit() {
    return static_cast<double>(nextU64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("RngStream::below: bound must be positive");
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
        const std::uint64_t r = nextU64();
        const unsigned __int128 m = static_cast<unsigned __int128>(r) * bound;
        if (static_cast<std::uint64_t>(m) >= threshold) {
            return static_cast<std::uint64_t>(m >> 64);
        }
    }
}

BigInt RngStream::belowBig(const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("RngStream::belowBig: bound must be positive");
    if (bound <= BigInt(UINT64_MAX)) return BigInt(below(bound.convert_to<std::uint64_t>()));
    const std::size_t bits = msb(bound) + 1;
    const std::size_t words = (bits + 63) / 64;
    const unsigned topBits = static_cast<unsigned>(bits - 64 * (words - 1));
    const std::uint64_t topMask =
        topBits == 64 ? ~0ULL : ((std::uint64_t{1} << topBits) - 1);
    for (;;) {
        BigInt v = nextU64() & topMask;
        for (std::size_t i = 1; i < words; ++i) {
            v <<= 64;
            v |= BigInt(nextU64());
        }
        if (v < bound) return v;
    }
}

}  // namespace schroder
