#pragma once

#include <cstdint>

namespace graphrecover {

/// xoshiro256** seeded through splitmix64. Fixed here so instances are
/// reproducible across builds and languages:
///
///   state[i] = splitmix64(seed) for i = 0..3 (successive outputs)
///   below(m) = high 64 bits of next() * m   (no rejection)
///   coin()   = top bit of next()
///   unit()   = (next() >> 11) * 2^-53
class Rng {
public:
    explicit Rng(std::uint64_t seed)
    {
        std::uint64_t x = seed;
        for (auto &s : state_)
            s = splitmix64(x);
    }

    static std::uint64_t splitmix64(std::uint64_t &x)
    {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next()
    {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform-ish value in [0, m); m must be positive.
    std::uint64_t below(std::uint64_t m)
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * m) >> 64);
    }

    bool coin() { return (next() >> 63) != 0; }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

} // namespace graphrecover
