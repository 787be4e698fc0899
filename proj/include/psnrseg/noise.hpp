#pragma once

#include <cstdint>

#include "psnrseg/image.hpp"

namespace psnrseg {

struct NoiseConfig {
    double density = 0.5; // probability a pixel is hit
    std::uint64_t seed = 1;
};

/// SplitMix64 engine, see https://prng.di.unimi.it
/// Bit-reproducible across platforms; one 64-bit word of state.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), from the top 53 bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Salt-and-pepper degradation. Pixels are visited in row-major order with
/// exactly one uniform draw each: u < density/2 forces 0, u < density forces
/// 255, otherwise the pixel is unchanged. The hit pattern depends only on
/// (seed, density, dimensions), never on mask content, so the same noise
/// field can be replayed onto different masks.
BinaryMask salt_pepper(const BinaryMask& mask, const NoiseConfig& cfg);

} // namespace psnrseg
