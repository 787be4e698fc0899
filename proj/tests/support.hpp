#pragma once

#include <filesystem>
#include <string>

#include "psnrseg/image.hpp"

namespace psnrseg::testing {

/// Unique directory under the system temp root, removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

/// Deterministic source image: smooth gradient plus hashed per-pixel texture.
GrayImage synthetic_source(int width, int height, std::uint64_t seed);

/// Deterministic ground truth: closed rectangle contour (255 on 0), geometry
/// varied by index so downstream PSNR values differ between entries.
GrayImage synthetic_ground_truth(int width, int height, int index);

/// Writes `pairs` P5 image/ground-truth pairs under root/images and
/// root/groundtruth, ids img000..imgNNN.
void make_synthetic_dataset(const std::filesystem::path& root, int pairs,
                            std::uint64_t seed);

std::string read_file(const std::filesystem::path& path);

} // namespace psnrseg::testing
