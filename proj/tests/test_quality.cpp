#include <doctest.h>

#include "dctfuse/blur.hpp"
#include "dctfuse/quality.hpp"
#include "support/textures.hpp"

using namespace dctfuse;

TEST_SUITE("quality") {
    TEST_CASE("mse of identical images is zero") {
        const GrayRaster img = testsupport::make_textured_image(32, 32, 601);
        CHECK(mse(img, img) == 0.0);
    }

    TEST_CASE("uniform +1 offset gives mse 1") {
        GrayRaster a(16, 16), b(16, 16);
        for (std::size_t i = 0; i < a.samples().size(); ++i) {
            a.samples()[i] = 100;
            b.samples()[i] = 101;
        }
        CHECK(mse(a, b) == 1.0);
    }

    TEST_CASE("2x1 hand-computed mse") {
        GrayRaster ref(2, 1), test(2, 1);
        test.at(0, 0) = 3;
        test.at(1, 0) = 4;
        CHECK(mse(ref, test) == 12.5);  // (9 + 16) / 2
    }

    TEST_CASE("mse is symmetric and rejects mismatched sizes") {
        const GrayRaster a = testsupport::make_textured_image(20, 14, 602);
        const GrayRaster b = testsupport::make_textured_image(20, 14, 603);
        CHECK(mse(a, b) == mse(b, a));
        const GrayRaster c(21, 14);
        CHECK_THROWS_AS(mse(a, c), std::invalid_argument);
    }

    TEST_CASE("ssim of identical images is 1") {
        const GrayRaster img = testsupport::make_textured_image(48, 32, 604);
        CHECK(ssim(img, img) == doctest::Approx(1.0).epsilon(1e-12));
    }

    TEST_CASE("ssim is symmetric") {
        const GrayRaster a = testsupport::make_textured_image(40, 40, 605);
        const GrayRaster b = testsupport::make_textured_image(40, 40, 606);
        CHECK(ssim(a, b) == doctest::Approx(ssim(b, a)).epsilon(1e-12));
    }

    TEST_CASE("ssim rejects images smaller than the window") {
        const GrayRaster small(10, 12);
        CHECK_THROWS_AS(ssim(small, small), std::invalid_argument);
        const GrayRaster a(16, 16), b(16, 17);
        CHECK_THROWS_AS(ssim(a, b), std::invalid_argument);
    }

    TEST_CASE("heavier blur scores lower ssim") {
        const GrayRaster src = testsupport::make_textured_image(64, 64, 607);
        const double s5 = ssim(src, box_filter(src, 5));
        const double s9 = ssim(src, box_filter(src, 9));
        CHECK(s9 < s5);
        CHECK(s5 < 1.0);
    }
}
