#include "dctfuse/focus.hpp"

#include <algorithm>

namespace dctfuse {

namespace {

double clamp_score(double v) {
    return std::max(0.0, v);
}

// (sum of squares - DC^2) / 64 over an 8x8 coefficient field.
double coeff_variance(const Mat8& coeffs) {
    const double dc = coeffs(0, 0);
    return (frobenius_trace(coeffs) - dc * dc) / 64.0;
}

}  // namespace

FocusScore eol_dct(const CoeffBlock& B, const OperatorSet& ops) {
    const CoeffBlock lap = laplacian_dct(B, ops);
    return {clamp_score(frobenius_trace(lap.coeffs)), MetricKind::kEol};
}

FocusScore eol_spatial(const SpatialBlock& b) {
    return {clamp_score(frobenius_trace(laplacian_spatial(b))), MetricKind::kEol};
}

FocusScore variance_dct(const CoeffBlock& B) {
    return {clamp_score(coeff_variance(B.coeffs)), MetricKind::kVariance};
}

FocusScore vol_dct(const CoeffBlock& B, const OperatorSet& ops) {
    const CoeffBlock lap = laplacian_dct(B, ops);
    return {clamp_score(coeff_variance(lap.coeffs)), MetricKind::kVol};
}

FocusScore vol_spatial(const SpatialBlock& b) {
    const Mat8 lap = laplacian_spatial(b);
    double mean = 0.0;
    for (int r = 0; r < Mat8::kN; ++r)
        for (int c = 0; c < Mat8::kN; ++c) mean += lap(r, c);
    mean /= 64.0;
    return {clamp_score(frobenius_trace(lap) / 64.0 - mean * mean),
            MetricKind::kVol};
}

}  // namespace dctfuse
