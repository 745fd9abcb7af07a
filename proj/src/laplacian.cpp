#include "dctfuse/laplacian.hpp"

namespace dctfuse {

namespace {

constexpr double kMask[3][3] = {
    {-1.0, -4.0, -1.0},
    {-4.0, 20.0, -4.0},
    {-1.0, -4.0, -1.0},
};

}  // namespace

OperatorSet build_spatial_operators() {
    OperatorSet ops;
    for (int i = 0; i < 6; ++i) {
        ops.outer_pick(i, i) = 1.0;
        ops.outer_pick(i, i + 2) = 1.0;
        ops.center_pick(i, i + 1) = 1.0;
    }
    for (int j = 0; j < 6; ++j) {
        ops.outer_mask(j, j) = -1.0;
        ops.outer_mask(j + 1, j) = -4.0;
        ops.outer_mask(j + 2, j) = -1.0;
        // Center column weights carry +20, matching the mask; the sign of
        // the center weight is what makes pick/mask products reproduce the
        // direct convolution.
        ops.center_mask(j, j) = -4.0;
        ops.center_mask(j + 1, j) = 20.0;
        ops.center_mask(j + 2, j) = -4.0;
    }
    return ops;
}

OperatorSet lift_to_dct(OperatorSet ops, const DctBasis& basis) {
    const Mat8& c = basis.c();
    const Mat8& ct = basis.ct();
    ops.outer_pick_dct = c * ops.outer_pick * ct;
    ops.outer_mask_dct = c * ops.outer_mask * ct;
    ops.center_pick_dct = c * ops.center_pick * ct;
    ops.center_mask_dct = c * ops.center_mask * ct;
    return ops;
}

OperatorSet make_operator_set(const DctBasis& basis) {
    return lift_to_dct(build_spatial_operators(), basis);
}

CoeffBlock laplacian_dct(const CoeffBlock& B, const OperatorSet& ops) {
    return CoeffBlock{ops.outer_pick_dct * B.coeffs * ops.outer_mask_dct +
                      ops.center_pick_dct * B.coeffs * ops.center_mask_dct};
}

Mat8 laplacian_spatial(const SpatialBlock& b) {
    Mat8 out;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            double acc = 0.0;
            for (int u = 0; u < 3; ++u)
                for (int v = 0; v < 3; ++v)
                    acc += kMask[u][v] * b.values(i + u, j + v);
            out(i, j) = acc;
        }
    }
    return out;
}

}  // namespace dctfuse
