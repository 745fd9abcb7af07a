#include <doctest.h>

#include "dctfuse/blur.hpp"
#include "support/textures.hpp"

using namespace dctfuse;

TEST_SUITE("blur") {
    TEST_CASE("box filter fixes constant images") {
        GrayRaster img(24, 16);
        std::fill(img.samples().begin(), img.samples().end(), 77);
        CHECK(box_filter(img, 5) == img);
        CHECK(box_filter(img, 9) == img);
        CHECK(synthetic_blur(img, {BlurSide::kLeft, 5}) == img);
    }

    TEST_CASE("synthetic blur touches only the requested half") {
        const GrayRaster src = testsupport::make_textured_image(40, 24, 501);
        const int split = 40 / 2;

        const GrayRaster left = synthetic_blur(src, {BlurSide::kLeft, 5});
        for (int y = 0; y < 24; ++y)
            for (int x = split; x < 40; ++x) CHECK(left.at(x, y) == src.at(x, y));

        const GrayRaster right = synthetic_blur(src, {BlurSide::kRight, 5});
        for (int y = 0; y < 24; ++y)
            for (int x = 0; x < split; ++x) CHECK(right.at(x, y) == src.at(x, y));
        CHECK_FALSE(right == src);
    }

    TEST_CASE("left then right blur composes to the full filter away from the seam") {
        const GrayRaster src = testsupport::make_textured_image(48, 20, 502);
        const int k = 9;
        const GrayRaster composed =
            synthetic_blur(synthetic_blur(src, {BlurSide::kLeft, k}), {BlurSide::kRight, k});
        const GrayRaster full = box_filter(src, k);

        const int split = 48 / 2;
        for (int y = 0; y < 20; ++y) {
            for (int x = 0; x < split; ++x) CHECK(composed.at(x, y) == full.at(x, y));
            // Right of the seam the second filter pass read requantized
            // left-half pixels; past the kernel reach it sees originals.
            for (int x = split + k / 2; x < 48; ++x)
                CHECK(composed.at(x, y) == full.at(x, y));
        }
    }

    TEST_CASE("mask sizes 5 and 9 differ on textured input") {
        const GrayRaster src = testsupport::make_textured_image(40, 24, 503);
        CHECK_FALSE(synthetic_blur(src, {BlurSide::kLeft, 5}) ==
                    synthetic_blur(src, {BlurSide::kLeft, 9}));
    }

    TEST_CASE("too-small images are rejected") {
        const GrayRaster tiny(9, 12);
        CHECK_THROWS_AS(synthetic_blur(tiny, {BlurSide::kLeft, 5}), std::invalid_argument);
    }

    TEST_CASE("make_pairs emits two pairs per image") {
        const std::vector<GrayRaster> one{testsupport::make_textured_image(32, 24, 504)};
        CHECK(make_pairs(one).size() == 2);

        std::vector<GrayRaster> six;
        for (int i = 0; i < 6; ++i)
            six.push_back(testsupport::make_textured_image(32, 24, 510 + i));
        const auto pairs = make_pairs(six);
        CHECK(pairs.size() == 12);
        CHECK(pairs[0].kernel_size == 5);
        CHECK(pairs[1].kernel_size == 9);
    }

    TEST_CASE("each pair member is pixel-identical to the source on its sharp half") {
        const std::vector<GrayRaster> images{testsupport::make_textured_image(36, 20, 505)};
        for (const MultiFocusPair& pair : make_pairs(images)) {
            const int split = pair.source.width() / 2;
            for (int y = 0; y < pair.source.height(); ++y) {
                for (int x = split; x < pair.source.width(); ++x)
                    CHECK(pair.left_blurred.at(x, y) == pair.source.at(x, y));
                for (int x = 0; x < split; ++x)
                    CHECK(pair.right_blurred.at(x, y) == pair.source.at(x, y));
            }
        }
    }
}
