#pragma once

#include "dctfuse/dct.hpp"
#include "dctfuse/laplacian.hpp"

namespace dctfuse {

enum class MetricKind { kEol, kVol, kVariance };

// Scalar focus/contrast measure of one block. Values are sums or means of
// squares minus a squared mean, so they are nonnegative; tiny negative
// results from floating-point cancellation are clamped to zero.
struct FocusScore {
    double value = 0.0;
    MetricKind kind = MetricKind::kEol;
};

// Energy of Laplacian from coefficients: trace(L * L^t) with
// L = laplacian_dct(B).
FocusScore eol_dct(const CoeffBlock& B, const OperatorSet& ops);

// Spatial oracle: sum of squared valid-convolution responses.
FocusScore eol_spatial(const SpatialBlock& b);

// Block variance from coefficients: (sum of squares - DC^2) / 64. Under
// the orthonormal basis DC = 8 * mean, so this is mean of squares minus
// squared mean.
FocusScore variance_dct(const CoeffBlock& B);

// Variance of Laplacian from coefficients: the variance formula applied
// to laplacian_dct(B).
FocusScore vol_dct(const CoeffBlock& B, const OperatorSet& ops);

// Spatial oracle: variance over all 64 entries of the zero-padded 8x8
// Laplacian field (the same support the coefficient-domain formula sees).
FocusScore vol_spatial(const SpatialBlock& b);

}  // namespace dctfuse
