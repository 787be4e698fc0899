#include "psnrseg/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace psnrseg {

namespace {
constexpr double kMaxSquared = 255.0 * 255.0;
} // namespace

double mse(const GrayImage& i, const GrayImage& k) {
    if (!i.same_shape(k))
        throw DatasetError("image shapes differ: " + std::to_string(i.width) + "x" +
                           std::to_string(i.height) + " vs " + std::to_string(k.width) +
                           "x" + std::to_string(k.height));
    if (i.pixels.empty())
        throw DatasetError("mse of empty images");

    std::uint64_t acc = 0;
    for (std::size_t p = 0; p < i.pixels.size(); ++p) {
        const std::int64_t d =
            static_cast<std::int64_t>(i.pixels[p]) - static_cast<std::int64_t>(k.pixels[p]);
        acc += static_cast<std::uint64_t>(d * d);
    }
    return static_cast<double>(acc) / static_cast<double>(i.pixels.size());
}

double psnr(const GrayImage& i, const GrayImage& k, PsnrVariant variant) {
    const double e = mse(i, k);
    if (e == 0.0)
        return std::numeric_limits<double>::infinity();
    const double standard = 10.0 * std::log10(kMaxSquared / e);
    if (variant == PsnrVariant::Standard)
        return standard;
    // 20*log10(MAX^2/sqrt(MSE)) == standard + 20*log10(255)
    return standard + 20.0 * std::log10(255.0);
}

} // namespace psnrseg
