#include "psnrseg/noise.hpp"

#include <stdexcept>
#include <string>

namespace psnrseg {

BinaryMask salt_pepper(const BinaryMask& mask, const NoiseConfig& cfg) {
    if (!(cfg.density >= 0.0 && cfg.density <= 1.0))
        throw std::invalid_argument("noise density must be in [0, 1], got " +
                                    std::to_string(cfg.density));

    GrayImage out = mask.image();
    SplitMix64 rng(cfg.seed);
    const double pepper_limit = cfg.density * 0.5;
    for (auto& px : out.pixels) {
        const double u = rng.next_double();
        if (u < pepper_limit)
            px = 0;
        else if (u < cfg.density)
            px = 255;
    }
    return as_binary(std::move(out));
}

} // namespace psnrseg
