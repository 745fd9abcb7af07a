#pragma once

#include "dctfuse/dct.hpp"
#include "dctfuse/mat8.hpp"

namespace dctfuse {

// 3x3 Laplacian mask used by every focus measure here:
//
//     -1  -4  -1
//     -4  +20 -4
//     -1  -4  -1
//
// Its valid convolution with an 8x8 block is a 6x6 field. That field can
// be produced purely with matrix products by splitting the mask into two
// rank-structured parts:
//
//     outer_pick * b * outer_mask   applies the top and bottom mask rows
//     center_pick * b * center_mask applies the middle mask row
//
// The sum places the 6x6 result in the top-left of an 8x8 matrix, with
// rows/cols 6-7 structurally zero. Lifting each operator o to the
// coefficient domain as C * o * C^t makes the same products work on DCT
// blocks directly: lifted_pick * B * lifted_mask equals the DCT of the
// spatial product, so Laplacian energy and variance can be read off a
// compressed block without inverse transforming it.
struct OperatorSet {
    // Spatial side.
    Mat8 outer_pick;    // ones at (i,i) and (i,i+2), i = 0..5
    Mat8 outer_mask;    // column j carries -1,-4,-1 at rows j..j+2
    Mat8 center_pick;   // ones at (i,i+1), i = 0..5
    Mat8 center_mask;   // column j carries -4,+20,-4 at rows j..j+2
    // Coefficient side (filled by lift_to_dct).
    Mat8 outer_pick_dct;
    Mat8 outer_mask_dct;
    Mat8 center_pick_dct;
    Mat8 center_mask_dct;
};

// Fills the spatial side only.
OperatorSet build_spatial_operators();

// Fills the coefficient side: each lifted operator is C * o * C^t.
OperatorSet lift_to_dct(OperatorSet ops, const DctBasis& basis);

// Convenience: both sides in one call.
OperatorSet make_operator_set(const DctBasis& basis);

// Laplacian of a coefficient block, computed entirely in the DCT domain.
CoeffBlock laplacian_dct(const CoeffBlock& B, const OperatorSet& ops);

// Spatial-domain oracle: direct valid 3x3 convolution of the mask with
// the block, zero-padded into the top-left of an 8x8 matrix.
Mat8 laplacian_spatial(const SpatialBlock& b);

}  // namespace dctfuse
