#include <cstdio>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include <doctest.h>

#include "dctfuse/image_io.hpp"
#include "support/textures.hpp"

using namespace dctfuse;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("dctfuse-io-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const char* name) const { return (path / name).string(); }
    static inline int counter = 0;
};

void write_bytes(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

}  // namespace

TEST_SUITE("image_io") {
    TEST_CASE("1x1 raster writes the exact specified bytes") {
        TempDir dir;
        const GrayRaster one(1, 1);
        save_pgm(one, dir.file("one.pgm"));
        const std::string expected = std::string("P5\n1 1\n255\n") + '\0';
        CHECK(read_bytes(dir.file("one.pgm")) == expected);
    }

    TEST_CASE("pgm round trip preserves every sample") {
        TempDir dir;
        const GrayRaster img = testsupport::make_textured_image(37, 23, 801);
        save_pgm(img, dir.file("t.pgm"));
        CHECK(load_pgm(dir.file("t.pgm")) == img);
        CHECK(load_image(dir.file("t.pgm")) == img);
    }

    TEST_CASE("8x8 header plus 64 bytes parses as expected") {
        TempDir dir;
        std::string payload = "P5\n8 8\n255\n";
        for (int i = 0; i < 64; ++i) payload.push_back(static_cast<char>(i));
        write_bytes(dir.file("b.pgm"), payload);
        const GrayRaster img = load_pgm(dir.file("b.pgm"));
        CHECK(img.width() == 8);
        CHECK(img.height() == 8);
        CHECK(img.at(7, 7) == 63);
        CHECK(img.at(1, 0) == 1);
    }

    TEST_CASE("header comments are tolerated on read") {
        TempDir dir;
        write_bytes(dir.file("c.pgm"), std::string("P5\n# made by hand\n2 1\n255\n") +
                                           '\x10' + '\x20');
        const GrayRaster img = load_pgm(dir.file("c.pgm"));
        CHECK(img.at(0, 0) == 0x10);
        CHECK(img.at(1, 0) == 0x20);
    }

    TEST_CASE("bad inputs are rejected with errors") {
        TempDir dir;
        CHECK_THROWS_AS(load_image(dir.file("missing.pgm")), std::runtime_error);

        write_bytes(dir.file("ascii.pgm"), "P2\n1 1\n255\n0\n");
        CHECK_THROWS_AS(load_image(dir.file("ascii.pgm")), std::runtime_error);

        write_bytes(dir.file("deep.pgm"), std::string("P5\n1 1\n65535\n") + "AB");
        CHECK_THROWS_AS(load_pgm(dir.file("deep.pgm")), std::runtime_error);

        write_bytes(dir.file("junk.pgm"), "not an image at all");
        CHECK_THROWS_AS(load_image(dir.file("junk.pgm")), std::runtime_error);

        write_bytes(dir.file("short.pgm"), "P5\n4 4\n255\nxy");
        CHECK_THROWS_AS(load_pgm(dir.file("short.pgm")), std::runtime_error);

        write_bytes(dir.file("nodim.pgm"), "P5\nwide tall\n255\n");
        CHECK_THROWS_AS(load_pgm(dir.file("nodim.pgm")), std::runtime_error);
    }

    TEST_CASE("P6 color input reduces to 601 luminance") {
        TempDir dir;
        // Two pixels: neutral gray (100,100,100) -> 100, and a saturated
        // red (255,0,0) -> round(76.245) = 76.
        std::string payload = "P6\n2 1\n255\n";
        const unsigned char rgb[6] = {100, 100, 100, 255, 0, 0};
        payload.append(reinterpret_cast<const char*>(rgb), 6);
        write_bytes(dir.file("c.ppm"), payload);
        const GrayRaster img = load_image(dir.file("c.ppm"));
        CHECK(img.at(0, 0) == 100);
        CHECK(img.at(1, 0) == 76);
    }

    TEST_CASE("luminance weights sum to one") {
        CHECK(luminance601(100, 100, 100) == 100);
        CHECK(luminance601(255, 255, 255) == 255);
        CHECK(luminance601(0, 0, 0) == 0);
    }

    TEST_CASE("failed writes leave no partial file behind") {
        const GrayRaster img(4, 4);
        CHECK_THROWS_AS(save_pgm(img, "/nonexistent-dir/out.pgm"), std::runtime_error);
        CHECK_FALSE(fs::exists("/nonexistent-dir/out.pgm"));
    }
}
