#include "psnrseg/maskgen.hpp"

#include <vector>

namespace psnrseg {

GrayImage fill_ground_truth(const GrayImage& g, const FillConfig& cfg) {
    const int w = g.width;
    const int h = g.height;
    const std::size_t n = g.pixel_count();

    std::vector<std::uint8_t> contour(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int v = g.pixels[i];
        contour[i] = cfg.invert_contours ? (v <= cfg.contour_threshold)
                                         : (v >= cfg.contour_threshold);
    }

    // Flood the background from every free border pixel, 4-connected, with an
    // explicit worklist (481x321 inputs would overflow a recursive fill).
    std::vector<std::uint8_t> background(n, 0);
    std::vector<std::int32_t> worklist;
    worklist.reserve(static_cast<std::size_t>(w) + h);

    auto try_push = [&](int x, int y) {
        const std::size_t idx = static_cast<std::size_t>(y) * w + x;
        if (!contour[idx] && !background[idx]) {
            background[idx] = 1;
            worklist.push_back(static_cast<std::int32_t>(idx));
        }
    };

    for (int x = 0; x < w; ++x) {
        try_push(x, 0);
        try_push(x, h - 1);
    }
    for (int y = 0; y < h; ++y) {
        try_push(0, y);
        try_push(w - 1, y);
    }

    while (!worklist.empty()) {
        const std::int32_t idx = worklist.back();
        worklist.pop_back();
        const int x = idx % w;
        const int y = idx / w;
        if (x > 0) try_push(x - 1, y);
        if (x < w - 1) try_push(x + 1, y);
        if (y > 0) try_push(x, y - 1);
        if (y < h - 1) try_push(x, y + 1);
    }

    // Unreached free pixels are enclosed interiors; they and the contour
    // pixels make the filled region.
    GrayImage out(w, h);
    for (std::size_t i = 0; i < n; ++i)
        out.pixels[i] = background[i] ? 0 : 255;
    return out;
}

BinaryMask binarize(const GrayImage& img, int t) {
    GrayImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixel_count(); ++i)
        out.pixels[i] = img.pixels[i] > t ? 255 : 0;
    return as_binary(std::move(out));
}

} // namespace psnrseg
