#include "psnrseg/image.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

namespace psnrseg {

namespace {

constexpr std::uint64_t kMaxPixels = 1ULL << 28; // 268M samples, plenty for BSDS

bool is_pnm_space(int c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

[[noreturn]] void fail(const std::string& what, std::size_t offset) {
    throw PnmError(what + " at byte " + std::to_string(offset));
}

struct Cursor {
    std::span<const std::uint8_t> data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }
    int peek() const { return eof() ? -1 : data[pos]; }

    // Whitespace and '#' comments (to end of line) between header tokens.
    void skip_separators() {
        while (!eof()) {
            if (is_pnm_space(peek())) {
                ++pos;
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    std::uint32_t parse_number(const char* what) {
        skip_separators();
        if (eof() || peek() < '0' || peek() > '9')
            fail(std::string("expected ") + what, pos);
        std::uint64_t value = 0;
        const std::size_t start = pos;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            if (value > 0xFFFFFFFFULL) fail(std::string(what) + " overflow", start);
            ++pos;
        }
        return static_cast<std::uint32_t>(value);
    }
};

} // namespace

BinaryMask::BinaryMask(GrayImage img) : img_(std::move(img)) {
    for (std::size_t i = 0; i < img_.pixels.size(); ++i) {
        const std::uint8_t v = img_.pixels[i];
        if (v != 0 && v != 255) {
            const int x = static_cast<int>(i % img_.width);
            const int y = static_cast<int>(i / img_.width);
            throw DatasetError("not a binary mask: pixel (" + std::to_string(x) +
                               ", " + std::to_string(y) + ") = " + std::to_string(v));
        }
    }
}

std::uint8_t to_gray(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    const double y = 0.299 * r + 0.587 * g + 0.114 * b;
    return static_cast<std::uint8_t>(std::floor(y + 0.5));
}

GrayImage read_pnm(std::span<const std::uint8_t> bytes) {
    Cursor cur{bytes};

    if (bytes.size() < 2 || bytes[0] != 'P')
        fail("malformed magic number", 0);
    const char kind = static_cast<char>(bytes[1]);
    if (kind != '2' && kind != '3' && kind != '5' && kind != '6')
        fail("malformed magic number", 0);
    cur.pos = 2;
    if (!cur.eof() && !is_pnm_space(cur.peek()) && cur.peek() != '#')
        fail("malformed magic number", 0);

    const bool color = (kind == '3' || kind == '6');
    const bool binary = (kind == '5' || kind == '6');

    const std::uint32_t width = cur.parse_number("width");
    const std::uint32_t height = cur.parse_number("height");
    const std::size_t dims_at = cur.pos;
    if (width == 0 || height == 0)
        fail("zero image dimension", dims_at);
    if (static_cast<std::uint64_t>(width) * height > kMaxPixels)
        fail("dimension overflow", dims_at);

    const std::size_t maxval_at = cur.pos;
    const std::uint32_t maxval = cur.parse_number("maxval");
    if (maxval != 255)
        fail("unsupported maxval " + std::to_string(maxval) + " (expected 255)",
             maxval_at);

    const std::size_t count = static_cast<std::size_t>(width) * height;
    const std::size_t samples = color ? count * 3 : count;
    std::vector<std::uint8_t> raw(samples);

    if (binary) {
        // Exactly one whitespace byte separates the maxval from the payload.
        if (cur.eof() || !is_pnm_space(cur.peek()))
            fail("expected whitespace before pixel data", cur.pos);
        ++cur.pos;
        if (bytes.size() - cur.pos < samples)
            fail("truncated pixel data: expected " + std::to_string(samples) +
                     " bytes, found " + std::to_string(bytes.size() - cur.pos),
                 cur.pos);
        std::copy_n(bytes.begin() + cur.pos, samples, raw.begin());
    } else {
        for (std::size_t i = 0; i < samples; ++i) {
            cur.skip_separators();
            if (cur.eof())
                fail("truncated pixel data: expected " + std::to_string(samples) +
                         " samples, found " + std::to_string(i),
                     cur.pos);
            const std::size_t at = cur.pos;
            const std::uint32_t v = cur.parse_number("sample");
            if (v > maxval)
                fail("sample " + std::to_string(v) + " exceeds maxval", at);
            raw[i] = static_cast<std::uint8_t>(v);
        }
    }

    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    if (color) {
        for (std::size_t i = 0; i < count; ++i)
            img.pixels[i] = to_gray(raw[3 * i], raw[3 * i + 1], raw[3 * i + 2]);
    } else {
        img.pixels = std::move(raw);
    }
    return img;
}

GrayImage read_pnm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DatasetError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    try {
        return read_pnm(bytes);
    } catch (const PnmError& e) {
        throw PnmError(path.string() + ": " + e.what());
    }
}

std::vector<std::uint8_t> write_pnm(const GrayImage& img, PnmFormat format) {
    std::string header = (format == PnmFormat::P5 ? "P5\n" : "P2\n");
    header += std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";

    std::vector<std::uint8_t> out(header.begin(), header.end());
    if (format == PnmFormat::P5) {
        out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    } else {
        std::string body;
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                if (x > 0) body += ' ';
                body += std::to_string(img.at(x, y));
            }
            body += '\n';
        }
        out.insert(out.end(), body.begin(), body.end());
    }
    return out;
}

void write_pnm_file(const GrayImage& img, PnmFormat format,
                    const std::filesystem::path& path) {
    const auto bytes = write_pnm(img, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw DatasetError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw DatasetError("write failed for " + path.string());
}

} // namespace psnrseg
