#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "psnrseg/image.hpp"
#include "psnrseg/noise.hpp"

using namespace psnrseg;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
    return {s.begin(), s.end()};
}

GrayImage random_image(int w, int h, std::uint64_t seed) {
    GrayImage img(w, h);
    SplitMix64 rng(seed);
    for (auto& px : img.pixels)
        px = static_cast<std::uint8_t>(rng.next_u64() & 0xFF);
    return img;
}

} // namespace

TEST_CASE("read_pnm decodes binary P5") {
    auto data = bytes_of("P5 2 2 255 ");
    const std::uint8_t payload[] = {0, 128, 255, 64};
    data.insert(data.end(), std::begin(payload), std::end(payload));

    const GrayImage img = read_pnm(data);
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 128, 255, 64});
}

TEST_CASE("read_pnm decodes ASCII P2") {
    const GrayImage img = read_pnm(bytes_of("P2 1 1 255 \n 7"));
    CHECK(img.width == 1);
    CHECK(img.height == 1);
    CHECK(img.pixels == std::vector<std::uint8_t>{7});
}

TEST_CASE("read_pnm converts P6 color through Rec.601") {
    auto data = bytes_of("P6 1 1 255\n");
    const std::uint8_t rgb[] = {255, 0, 0};
    data.insert(data.end(), std::begin(rgb), std::end(rgb));
    // round(0.299*255) = 76, cross-checked with an external image tool
    CHECK(read_pnm(data).pixels == std::vector<std::uint8_t>{76});
}

TEST_CASE("read_pnm decodes ASCII P3") {
    const GrayImage img = read_pnm(bytes_of("P3 2 1 255  0 255 0  255 255 255"));
    CHECK(img.pixels == std::vector<std::uint8_t>{150, 255});
}

TEST_CASE("read_pnm tolerates comments and loose whitespace") {
    const GrayImage img = read_pnm(
        bytes_of("P2 # a comment\n#another\n  2 # width done\n1\t255\n12 34"));
    CHECK(img.width == 2);
    CHECK(img.pixels == std::vector<std::uint8_t>{12, 34});
}

TEST_CASE("read_pnm failure modes carry byte offsets") {
    SECTION("bad magic") {
        CHECK_THROWS_WITH(read_pnm(bytes_of("Q5 1 1 255 x")),
                          Catch::Matchers::ContainsSubstring("at byte 0"));
        CHECK_THROWS_AS(read_pnm(bytes_of("P7 1 1 255 x")), PnmError);
        CHECK_THROWS_AS(read_pnm(bytes_of("P")), PnmError);
    }
    SECTION("maxval must be 255") {
        CHECK_THROWS_WITH(read_pnm(bytes_of("P2 1 1 65535 7")),
                          Catch::Matchers::ContainsSubstring("maxval"));
        CHECK_THROWS_AS(read_pnm(bytes_of("P5 1 1 254 x")), PnmError);
    }
    SECTION("truncated payload") {
        auto data = bytes_of("P5 2 2 255 ");
        data.push_back(9);
        CHECK_THROWS_WITH(read_pnm(data),
                          Catch::Matchers::ContainsSubstring("truncated"));
        CHECK_THROWS_WITH(read_pnm(bytes_of("P2 2 2 255 1 2 3")),
                          Catch::Matchers::ContainsSubstring("truncated"));
    }
    SECTION("dimension overflow") {
        CHECK_THROWS_WITH(read_pnm(bytes_of("P5 100000 100000 255 ")),
                          Catch::Matchers::ContainsSubstring("dimension overflow"));
        CHECK_THROWS_WITH(read_pnm(bytes_of("P5 0 4 255 ")),
                          Catch::Matchers::ContainsSubstring("zero image dimension"));
    }
    SECTION("ASCII sample above maxval") {
        CHECK_THROWS_AS(read_pnm(bytes_of("P2 1 1 255 256")), PnmError);
    }
}

TEST_CASE("write_pnm P5 layout is exact") {
    const GrayImage img(1, 1, std::vector<std::uint8_t>{7});
    const auto out = write_pnm(img, PnmFormat::P5);
    const std::string header = "P5\n1 1\n255\n";
    REQUIRE(out.size() == header.size() + 1);
    CHECK(std::string(out.begin(), out.begin() + header.size()) == header);
    CHECK(out.back() == 7);
}

TEST_CASE("write_pnm P5 payload length") {
    const auto out = write_pnm(GrayImage(3, 2, 9), PnmFormat::P5);
    CHECK(out.size() == std::string("P5\n3 2\n255\n").size() + 6);
}

TEST_CASE("P5 round-trip is the identity") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const GrayImage img = random_image(1 + seed % 13, 1 + seed % 7, seed);
        CHECK(read_pnm(write_pnm(img, PnmFormat::P5)) == img);
    }
}

TEST_CASE("P2 and P5 encodings decode identically") {
    for (std::uint64_t seed = 50; seed < 56; ++seed) {
        const GrayImage img = random_image(9, 4, seed);
        CHECK(read_pnm(write_pnm(img, PnmFormat::P2)) ==
              read_pnm(write_pnm(img, PnmFormat::P5)));
    }
}

TEST_CASE("to_gray reference points") {
    CHECK(to_gray(0, 0, 0) == 0);
    CHECK(to_gray(255, 255, 255) == 255);
    CHECK(to_gray(0, 255, 0) == 150); // round(0.587*255) = round(149.685)
    CHECK(to_gray(255, 0, 0) == 76);
    CHECK(to_gray(0, 0, 255) == 29);
}

TEST_CASE("to_gray is monotone and fixes equal channels") {
    SplitMix64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const auto r = static_cast<std::uint8_t>(rng.next_u64() & 0xFF);
        const auto g = static_cast<std::uint8_t>(rng.next_u64() & 0xFF);
        const auto b = static_cast<std::uint8_t>(rng.next_u64() & 0xFF);
        const std::uint8_t base = to_gray(r, g, b);
        if (r < 255) CHECK(to_gray(r + 1, g, b) >= base);
        if (g < 255) CHECK(to_gray(r, g + 1, b) >= base);
        if (b < 255) CHECK(to_gray(r, g, b + 1) >= base);
        const auto v = static_cast<std::uint8_t>(rng.next_u64() & 0xFF);
        CHECK(to_gray(v, v, v) == v);
    }
}

TEST_CASE("as_binary accepts masks and names offenders") {
    CHECK(as_binary(GrayImage(3, 3, 0)).image() == GrayImage(3, 3, 0));
    const GrayImage ok(2, 2, std::vector<std::uint8_t>{0, 255, 255, 0});
    CHECK(as_binary(ok).image() == ok);

    GrayImage bad(3, 2, 0);
    bad.at(2, 1) = 128;
    CHECK_THROWS_WITH(as_binary(bad),
                      Catch::Matchers::ContainsSubstring("(2, 1) = 128"));
}
