#pragma once

#include "psnrseg/image.hpp"

namespace psnrseg {

struct FillConfig {
    int contour_threshold = 128;  // pixels >= threshold count as contour
    bool invert_contours = false; // when true, pixels <= threshold are contour
    int binarize_threshold = 127;
};

/// Fills closed contours of a ground-truth image with white. Pixels are
/// classified as contour or free per FillConfig; free pixels reachable from
/// the border (4-connected) become background (0), everything else (contour
/// and enclosed interiors) becomes 255. The fill is worklist-based, never
/// recursive.
GrayImage fill_ground_truth(const GrayImage& g, const FillConfig& cfg = {});

/// Strict-greater threshold: pixel > t maps to 255, else 0. t in [0, 255].
BinaryMask binarize(const GrayImage& img, int t);

} // namespace psnrseg
