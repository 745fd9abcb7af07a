#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dctfuse/dct.hpp"
#include "dctfuse/focus.hpp"
#include "dctfuse/raster.hpp"

namespace dctfuse {

enum class FusionMetric { kEol, kVol, kVariance, kAverage };
enum class TiePolicy { kAverage, kFirst };
enum class PadPolicy { kEdgeReplicate };

struct FusionConfig {
    FusionMetric metric = FusionMetric::kVol;
    bool cv_enabled = false;
    int cv_window = 5;
    TiePolicy tie_policy = TiePolicy::kAverage;
    PadPolicy pad_policy = PadPolicy::kEdgeReplicate;

    // Throws std::invalid_argument on a bad window (must be odd, >= 3).
    void validate() const;
};

// An image split into 8x8 tiles, row-major. Padding (edge replication)
// is recorded so assembly can crop back to the original size.
template <class Block>
struct BlockGrid {
    int rows = 0;
    int cols = 0;
    int original_width = 0;
    int original_height = 0;
    int pad_right = 0;
    int pad_bottom = 0;
    std::vector<Block> blocks;

    const Block& block(int r, int c) const { return blocks[static_cast<std::size_t>(r) * cols + c]; }
    Block& block(int r, int c) { return blocks[static_cast<std::size_t>(r) * cols + c]; }
};

using SpatialGrid = BlockGrid<SpatialBlock>;
using CoeffGrid = BlockGrid<CoeffBlock>;

// Per-tile source labels. Entries are source indices (0-based) or kTie.
// For two sources this carries the +1/0/-1 comparison convention via
// sign_at(): +1 = first source wins, -1 = second, 0 = tie.
class DecisionMap {
public:
    static constexpr std::int16_t kTie = -1;

    DecisionMap() = default;
    DecisionMap(int rows, int cols)
        : rows_(rows), cols_(cols),
          labels_(static_cast<std::size_t>(rows) * cols, kTie) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int16_t at(int r, int c) const { return labels_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::int16_t& at(int r, int c) { return labels_[static_cast<std::size_t>(r) * cols_ + c]; }

    int sign_at(int r, int c) const {
        const std::int16_t v = at(r, c);
        if (v == kTie) return 0;
        return v == 0 ? +1 : -1;
    }

    friend bool operator==(const DecisionMap& a, const DecisionMap& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.labels_ == b.labels_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int16_t> labels_;
};

// Pad by edge replication to multiples of 8 and split into tiles.
// Throws std::invalid_argument for an empty image.
SpatialGrid tile(const GrayRaster& image);

// Inverse of tile(): reassemble, crop padding, quantize to 8 bits.
GrayRaster untile(const SpatialGrid& grid);

CoeffGrid forward_grid(const SpatialGrid& grid, const DctBasis& basis);
SpatialGrid inverse_grid(const CoeffGrid& grid, const DctBasis& basis);

// Score of one coefficient block under the given metric (not kAverage).
double block_score(const CoeffBlock& B, FusionMetric metric, const OperatorSet& ops);

// Per-tile strict comparison of focus scores: the unique argmax wins,
// equal bests give kTie. Grids must agree in dimensions.
DecisionMap decide(const CoeffGrid& a, const CoeffGrid& b, FusionMetric metric,
                   const OperatorSet& ops);
DecisionMap decide(std::span<const CoeffGrid> grids, FusionMetric metric,
                   const OperatorSet& ops);

// Majority filter over a window x window neighborhood (the cell included,
// out-of-bounds cells skipped). Each label becomes the strict plurality
// winner among the in-window source labels; ties keep the original label
// and tie cells abstain from voting. For two sources this is exactly
// sign-of-mean on +1/0/-1 labels with a zero mean keeping the original.
DecisionMap consistency_verify(const DecisionMap& map, int window);

// Build the fused raster from labeled tiles. Tie tiles take the mean of
// all sources' coefficient blocks under TiePolicy::kAverage, the first
// source's block under kFirst.
GrayRaster assemble(const CoeffGrid& a, const CoeffGrid& b, const DecisionMap& map,
                    TiePolicy tie_policy, const DctBasis& basis);
GrayRaster assemble(std::span<const CoeffGrid> grids, const DecisionMap& map,
                    TiePolicy tie_policy, const DctBasis& basis);

struct FusionResult {
    GrayRaster image;
    // Absent for FusionMetric::kAverage, which selects no blocks.
    std::optional<DecisionMap> map;
};

// The full pipeline: tile, transform, score, decide, optional consistency
// verification, assemble. Inputs must agree in size; at least two are
// required. Output is deterministic regardless of worker count.
FusionResult fuse(const std::vector<GrayRaster>& images, const FusionConfig& config);

}  // namespace dctfuse
