#include "support.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "psnrseg/noise.hpp"

namespace psnrseg::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
    static std::uint64_t counter = 0;
    const fs::path base = fs::temp_directory_path();
    for (int attempt = 0; attempt < 100; ++attempt) {
        fs::path candidate =
            base / ("psnrseg_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++));
        std::error_code ec;
        if (fs::create_directory(candidate, ec)) {
            path_ = candidate;
            return;
        }
    }
    throw std::runtime_error("could not create temp directory");
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

GrayImage synthetic_source(int width, int height, std::uint64_t seed) {
    GrayImage img(width, height);
    SplitMix64 rng(seed);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const int base = (x * 5 + y * 3) % 200;
            const int texture = static_cast<int>(rng.next_u64() % 56);
            img.at(x, y) = static_cast<std::uint8_t>(base + texture);
        }
    }
    return img;
}

GrayImage synthetic_ground_truth(int width, int height, int index) {
    GrayImage gt(width, height, 0);
    const int x0 = 2 + (index % 5);
    const int y0 = 2 + (index % 4);
    const int x1 = width - 3 - (index % 3);
    const int y1 = height - 3 - (index % 2);
    for (int x = x0; x <= x1; ++x) {
        gt.at(x, y0) = 255;
        gt.at(x, y1) = 255;
    }
    for (int y = y0; y <= y1; ++y) {
        gt.at(x0, y) = 255;
        gt.at(x1, y) = 255;
    }
    return gt;
}

void make_synthetic_dataset(const fs::path& root, int pairs, std::uint64_t seed) {
    fs::create_directories(root / "images");
    fs::create_directories(root / "groundtruth");
    for (int i = 0; i < pairs; ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "img%03d.pgm", i);
        const int w = 48, h = 36;
        write_pnm_file(synthetic_source(w, h, seed + i), PnmFormat::P5,
                       root / "images" / name);
        write_pnm_file(synthetic_ground_truth(w, h, i), PnmFormat::P5,
                       root / "groundtruth" / name);
    }
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace psnrseg::testing
