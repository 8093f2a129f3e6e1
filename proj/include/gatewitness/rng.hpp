#pragma once

#include <cmath>
#include <cstdint>

namespace gatewitness {

// Finalizer step of splitmix64 (Vigna 2015, public domain reference code).
// Used both as the generator's output function and to derive substream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Hash-chains (seed, a, b) into an independent substream seed. Pure integer
// arithmetic, so the mapping is identical on every platform.
constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a,
                                      std::uint64_t b = 0) noexcept {
    return mix64(mix64(mix64(seed) ^ a) ^ b);
}

// splitmix64: the state steps by a fixed odd constant and each output is the
// mix of the new state, so the bitstream for a given seed is reproducible
// everywhere.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; the cosine branch only, so one draw
    // consumes exactly two generator outputs.
    double next_gaussian() noexcept {
        const double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t state_;
};

}  // namespace gatewitness
