#include "dctfuse/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dctfuse/parallel.hpp"

namespace dctfuse {

namespace {

void require_same_shape(const CoeffGrid& a, const CoeffGrid& b, const char* what) {
    if (a.rows != b.rows || a.cols != b.cols ||
        a.original_width != b.original_width ||
        a.original_height != b.original_height) {
        throw std::invalid_argument(std::string(what) + ": grid dimensions differ");
    }
}

DecisionMap decide_impl(std::span<const CoeffGrid* const> grids, FusionMetric metric,
                        const OperatorSet& ops) {
    if (grids.size() < 2)
        throw std::invalid_argument("decide: need at least two grids");
    if (metric == FusionMetric::kAverage)
        throw std::invalid_argument("decide: kAverage builds no decision map");
    for (std::size_t i = 1; i < grids.size(); ++i)
        require_same_shape(*grids[0], *grids[i], "decide");

    DecisionMap map(grids[0]->rows, grids[0]->cols);
    const int tiles = grids[0]->rows * grids[0]->cols;
    parallel_for(tiles, [&](int t) {
        double best = -1.0;
        std::int16_t label = DecisionMap::kTie;
        for (std::size_t s = 0; s < grids.size(); ++s) {
            const double score = block_score(grids[s]->blocks[t], metric, ops);
            if (score > best) {
                best = score;
                label = static_cast<std::int16_t>(s);
            } else if (score == best) {
                label = DecisionMap::kTie;
            }
        }
        map.at(t / map.cols(), t % map.cols()) = label;
    });
    return map;
}

GrayRaster assemble_impl(std::span<const CoeffGrid* const> grids, const DecisionMap& map,
                         TiePolicy tie_policy, const DctBasis& basis) {
    if (grids.empty())
        throw std::invalid_argument("assemble: no grids");
    for (std::size_t i = 1; i < grids.size(); ++i)
        require_same_shape(*grids[0], *grids[i], "assemble");
    if (map.rows() != grids[0]->rows || map.cols() != grids[0]->cols)
        throw std::invalid_argument("assemble: decision map dimensions differ from grids");
    for (int r = 0; r < map.rows(); ++r)
        for (int c = 0; c < map.cols(); ++c)
            if (map.at(r, c) != DecisionMap::kTie &&
                static_cast<std::size_t>(map.at(r, c)) >= grids.size())
                throw std::invalid_argument("assemble: label out of range");

    SpatialGrid fused;
    fused.rows = grids[0]->rows;
    fused.cols = grids[0]->cols;
    fused.original_width = grids[0]->original_width;
    fused.original_height = grids[0]->original_height;
    fused.pad_right = grids[0]->pad_right;
    fused.pad_bottom = grids[0]->pad_bottom;
    fused.blocks.resize(grids[0]->blocks.size());

    const int tiles = fused.rows * fused.cols;
    parallel_for(tiles, [&](int t) {
        const std::int16_t label = map.at(t / map.cols(), t % map.cols());
        CoeffBlock chosen;
        if (label != DecisionMap::kTie) {
            chosen = grids[label]->blocks[t];
        } else if (tie_policy == TiePolicy::kFirst) {
            chosen = grids[0]->blocks[t];
        } else {
            for (const CoeffGrid* g : grids) chosen.coeffs += g->blocks[t].coeffs;
            chosen.coeffs *= 1.0 / static_cast<double>(grids.size());
        }
        fused.blocks[t] = dct_inverse(chosen, basis);
    });
    return untile(fused);
}

std::vector<const CoeffGrid*> grid_pointers(std::span<const CoeffGrid> grids) {
    std::vector<const CoeffGrid*> ptrs;
    ptrs.reserve(grids.size());
    for (const CoeffGrid& g : grids) ptrs.push_back(&g);
    return ptrs;
}

}  // namespace

void FusionConfig::validate() const {
    if (cv_window < 3 || cv_window % 2 == 0)
        throw std::invalid_argument("cv_window must be an odd integer >= 3");
}

SpatialGrid tile(const GrayRaster& image) {
    if (image.empty())
        throw std::invalid_argument("tile: empty image");

    SpatialGrid grid;
    grid.original_width = image.width();
    grid.original_height = image.height();
    grid.cols = (image.width() + 7) / 8;
    grid.rows = (image.height() + 7) / 8;
    grid.pad_right = grid.cols * 8 - image.width();
    grid.pad_bottom = grid.rows * 8 - image.height();
    grid.blocks.resize(static_cast<std::size_t>(grid.rows) * grid.cols);

    const int max_x = image.width() - 1;
    const int max_y = image.height() - 1;
    for (int tr = 0; tr < grid.rows; ++tr) {
        for (int tc = 0; tc < grid.cols; ++tc) {
            SpatialBlock& blk = grid.block(tr, tc);
            for (int y = 0; y < 8; ++y) {
                const int sy = std::min(tr * 8 + y, max_y);  // edge replication
                for (int x = 0; x < 8; ++x) {
                    const int sx = std::min(tc * 8 + x, max_x);
                    blk.values(y, x) = static_cast<double>(image.at(sx, sy));
                }
            }
        }
    }
    return grid;
}

GrayRaster untile(const SpatialGrid& grid) {
    GrayRaster out(grid.original_width, grid.original_height);
    for (int tr = 0; tr < grid.rows; ++tr) {
        for (int tc = 0; tc < grid.cols; ++tc) {
            const SpatialBlock& blk = grid.block(tr, tc);
            for (int y = 0; y < 8; ++y) {
                const int oy = tr * 8 + y;
                if (oy >= grid.original_height) break;
                for (int x = 0; x < 8; ++x) {
                    const int ox = tc * 8 + x;
                    if (ox >= grid.original_width) break;
                    out.at(ox, oy) = quantize_sample(blk.values(y, x));
                }
            }
        }
    }
    return out;
}

CoeffGrid forward_grid(const SpatialGrid& grid, const DctBasis& basis) {
    CoeffGrid out;
    out.rows = grid.rows;
    out.cols = grid.cols;
    out.original_width = grid.original_width;
    out.original_height = grid.original_height;
    out.pad_right = grid.pad_right;
    out.pad_bottom = grid.pad_bottom;
    out.blocks.resize(grid.blocks.size());
    parallel_for(static_cast<int>(grid.blocks.size()), [&](int i) {
        out.blocks[i] = dct_forward(grid.blocks[i], basis);
    });
    return out;
}

SpatialGrid inverse_grid(const CoeffGrid& grid, const DctBasis& basis) {
    SpatialGrid out;
    out.rows = grid.rows;
    out.cols = grid.cols;
    out.original_width = grid.original_width;
    out.original_height = grid.original_height;
    out.pad_right = grid.pad_right;
    out.pad_bottom = grid.pad_bottom;
    out.blocks.resize(grid.blocks.size());
    parallel_for(static_cast<int>(grid.blocks.size()), [&](int i) {
        out.blocks[i] = dct_inverse(grid.blocks[i], basis);
    });
    return out;
}

double block_score(const CoeffBlock& B, FusionMetric metric, const OperatorSet& ops) {
    switch (metric) {
        case FusionMetric::kEol:
            return eol_dct(B, ops).value;
        case FusionMetric::kVol:
            return vol_dct(B, ops).value;
        case FusionMetric::kVariance:
            return variance_dct(B).value;
        case FusionMetric::kAverage:
            break;
    }
    throw std::invalid_argument("block_score: kAverage has no per-block score");
}

DecisionMap decide(const CoeffGrid& a, const CoeffGrid& b, FusionMetric metric,
                   const OperatorSet& ops) {
    const CoeffGrid* grids[] = {&a, &b};
    return decide_impl(grids, metric, ops);
}

DecisionMap decide(std::span<const CoeffGrid> grids, FusionMetric metric,
                   const OperatorSet& ops) {
    return decide_impl(grid_pointers(grids), metric, ops);
}

DecisionMap consistency_verify(const DecisionMap& map, int window) {
    if (window < 3 || window % 2 == 0)
        throw std::invalid_argument("consistency_verify: window must be odd, >= 3");

    const int reach = window / 2;
    DecisionMap out(map.rows(), map.cols());

    // Highest source index present bounds the vote table.
    int max_label = 0;
    for (int r = 0; r < map.rows(); ++r)
        for (int c = 0; c < map.cols(); ++c)
            max_label = std::max(max_label, static_cast<int>(map.at(r, c)));

    std::vector<int> votes(static_cast<std::size_t>(max_label) + 1);
    for (int r = 0; r < map.rows(); ++r) {
        for (int c = 0; c < map.cols(); ++c) {
            std::fill(votes.begin(), votes.end(), 0);
            const int r0 = std::max(0, r - reach);
            const int r1 = std::min(map.rows() - 1, r + reach);
            const int c0 = std::max(0, c - reach);
            const int c1 = std::min(map.cols() - 1, c + reach);
            for (int rr = r0; rr <= r1; ++rr)
                for (int cc = c0; cc <= c1; ++cc)
                    if (map.at(rr, cc) != DecisionMap::kTie)
                        ++votes[map.at(rr, cc)];

            int best = -1, best_count = 0;
            bool unique = false;
            for (int s = 0; s <= max_label; ++s) {
                if (votes[s] > best_count) {
                    best_count = votes[s];
                    best = s;
                    unique = true;
                } else if (votes[s] == best_count) {
                    unique = false;
                }
            }
            out.at(r, c) = (unique && best_count > 0) ? static_cast<std::int16_t>(best)
                                                      : map.at(r, c);
        }
    }
    return out;
}

GrayRaster assemble(const CoeffGrid& a, const CoeffGrid& b, const DecisionMap& map,
                    TiePolicy tie_policy, const DctBasis& basis) {
    const CoeffGrid* grids[] = {&a, &b};
    return assemble_impl(grids, map, tie_policy, basis);
}

GrayRaster assemble(std::span<const CoeffGrid> grids, const DecisionMap& map,
                    TiePolicy tie_policy, const DctBasis& basis) {
    return assemble_impl(grid_pointers(grids), map, tie_policy, basis);
}

FusionResult fuse(const std::vector<GrayRaster>& images, const FusionConfig& config) {
    config.validate();
    if (images.size() < 2)
        throw std::invalid_argument("fuse: need at least two input images");
    for (std::size_t i = 1; i < images.size(); ++i) {
        if (images[i].width() != images[0].width() ||
            images[i].height() != images[0].height())
            throw std::invalid_argument("fuse: input image dimensions differ");
    }

    const DctBasis basis = make_dct_basis();
    const OperatorSet ops = make_operator_set(basis);

    std::vector<CoeffGrid> grids;
    grids.reserve(images.size());
    for (const GrayRaster& img : images)
        grids.push_back(forward_grid(tile(img), basis));

    if (config.metric == FusionMetric::kAverage) {
        CoeffGrid mean = grids[0];
        const double inv = 1.0 / static_cast<double>(grids.size());
        parallel_for(static_cast<int>(mean.blocks.size()), [&](int t) {
            for (std::size_t s = 1; s < grids.size(); ++s)
                mean.blocks[t].coeffs += grids[s].blocks[t].coeffs;
            mean.blocks[t].coeffs *= inv;
        });
        return {untile(inverse_grid(mean, basis)), std::nullopt};
    }

    DecisionMap map = decide(grids, config.metric, ops);
    if (config.cv_enabled) map = consistency_verify(map, config.cv_window);
    GrayRaster out = assemble(grids, map, config.tie_policy, basis);
    return {std::move(out), std::move(map)};
}

}  // namespace dctfuse
