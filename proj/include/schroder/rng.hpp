#pragma once

// Deterministic random streams.
//
// RngStream is xoshiro256** seeded through SplitMix64.  The same
// (seed, stream) pair produces the same output sequence on every platform.
// Stream splitting rule: the SplitMix64 state is initialised to
//   seed + (stream + 1) * 0x9E3779B97F4A7C15
// and the four xoshiro words are its first four outputs.  Distinct stream
// ids therefore give statistically independent sequences from one seed.

#include "schroder/numeric.hpp"

#include <cstdint>

namespace schroder {

class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t nextU64();

    // 53-bit dyadic rational in [0, 1).
    double nextUnit();

    // Uniform integer in [0, bound); bound > 0.  Exact (rejection sampling).
    std::uint64_t below(std::uint64_t bound);

    // Uniform BigInt in [0, bound); bound > 0.  Exact.
    BigInt belowBig(const BigInt& bound);

private:
    std::uint64_t s_[4];
    std::uint64_t seed_;
    std::uint64_t stream_;
};

}  // namespace schroder
