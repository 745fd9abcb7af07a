#include <doctest.h>

#include "dctfuse/bench.hpp"
#include "dctfuse/quality.hpp"
#include "support/textures.hpp"

using namespace dctfuse;

TEST_SUITE("bench") {
    TEST_CASE("method grid covers four metrics times cv off/on") {
        const auto grid = benchmark_method_grid();
        CHECK(grid.size() == 8);
    }

    TEST_CASE("benchmark rows are sorted and keep the pair count") {
        std::vector<GrayRaster> sources{testsupport::make_textured_image(96, 96, 210)};
        const auto pairs = make_pairs(sources);
        REQUIRE(pairs.size() == 2);

        const auto rows = run_benchmark(pairs, benchmark_method_grid());
        REQUIRE(rows.size() == 8);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const bool ordered = rows[i - 1].method < rows[i].method ||
                                 (rows[i - 1].method == rows[i].method &&
                                  rows[i - 1].cv < rows[i].cv);
            CHECK(ordered);
        }
        for (const MethodScore& row : rows) {
            CHECK(row.pairs == 2);
            CHECK(row.pair_ssim.size() == 2);
            CHECK(row.avg_mse >= 0.0);
        }
    }

    TEST_CASE("block selection beats plain coefficient averaging") {
        std::vector<GrayRaster> sources;
        for (int i = 0; i < 2; ++i)
            sources.push_back(testsupport::make_textured_image(128, 96, 220 + i));
        const auto rows = run_benchmark(make_pairs(sources), benchmark_method_grid());

        auto row = [&](const char* method, bool cv) -> const MethodScore& {
            for (const MethodScore& r : rows)
                if (r.method == method && r.cv == cv) return r;
            throw std::logic_error("row missing");
        };
        CHECK(row("vol", false).avg_mse < row("average", false).avg_mse);
        CHECK(row("eol", false).avg_mse < row("average", false).avg_mse);
        CHECK(row("vol", false).avg_ssim > row("average", false).avg_ssim);
    }

    TEST_CASE("a pair of two unblurred copies scores ssim 1, mse 0") {
        const GrayRaster src = testsupport::make_textured_image(64, 64, 230);
        MultiFocusPair pair;
        pair.left_blurred = src;
        pair.right_blurred = src;
        pair.source = src;
        pair.kernel_size = 0;
        for (const MethodScore& row : run_benchmark({pair}, benchmark_method_grid())) {
            CHECK(row.avg_ssim == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(row.avg_mse == 0.0);
        }
    }

    TEST_CASE("csv layout and significant digits") {
        MethodScore row;
        row.method = "vol";
        row.cv = true;
        row.avg_ssim = 0.99503217;
        row.avg_mse = 68.9065432;
        row.pairs = 12;
        const std::string csv = benchmark_csv({row});
        CHECK(csv == "method,cv,avg_ssim,avg_mse,pairs\nvol,on,0.995032,68.9065,12\n");
    }

    TEST_CASE("empty pair list is rejected") {
        CHECK_THROWS_AS(run_benchmark({}, benchmark_method_grid()), std::invalid_argument);
    }
}
