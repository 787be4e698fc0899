#pragma once

#include "psnrseg/image.hpp"

namespace psnrseg {

/// Standard is the conventional 10*log10(MAX^2/MSE). AsWritten keeps MAX^2
/// under the factor-20 logarithm, 20*log10(MAX^2/sqrt(MSE)), which equals
/// Standard + 20*log10(255).
enum class PsnrVariant { Standard, AsWritten };

/// Mean squared error over all pixels. Accumulates in 64-bit integers and
/// divides once at the end, so the result is bit-reproducible.
double mse(const GrayImage& i, const GrayImage& k);

/// Peak signal-to-noise ratio in dB; +infinity when the images are identical.
double psnr(const GrayImage& i, const GrayImage& k,
            PsnrVariant variant = PsnrVariant::Standard);

} // namespace psnrseg
