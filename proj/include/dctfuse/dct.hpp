#pragma once

#include "dctfuse/mat8.hpp"

namespace dctfuse {

// One 8x8 tile of pixel intensities (nominal range [0,255], not enforced).
struct SpatialBlock {
    Mat8 values;
};

// DCT-II coefficients of a SpatialBlock; entry (0,0) is the DC coefficient.
struct CoeffBlock {
    Mat8 coeffs;
};

// Orthonormal 8x8 DCT-II matrix and its transpose. Entry (k,n) is
// a(k) * cos((2n+1) k pi / 16) with a(0) = 1/sqrt(8) and a(k>=1) = 1/2,
// so the inverse transform is the transpose. Immutable once built and
// safe to share across threads.
class DctBasis {
public:
    DctBasis();

    const Mat8& c() const { return c_; }
    const Mat8& ct() const { return ct_; }

private:
    Mat8 c_;
    Mat8 ct_;
};

DctBasis make_dct_basis();

// B = C * b * C^t
CoeffBlock dct_forward(const SpatialBlock& b, const DctBasis& basis);

// b = C^t * B * C
SpatialBlock dct_inverse(const CoeffBlock& B, const DctBasis& basis);

}  // namespace dctfuse
