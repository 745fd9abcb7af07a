#include "dctfuse/dct.hpp"

#include <cmath>

namespace dctfuse {

DctBasis::DctBasis() {
    const double pi = std::acos(-1.0);
    const double dc_scale = 1.0 / std::sqrt(8.0);
    for (int k = 0; k < Mat8::kN; ++k) {
        const double scale = (k == 0) ? dc_scale : 0.5;
        for (int n = 0; n < Mat8::kN; ++n) {
            c_(k, n) = scale * std::cos((2 * n + 1) * k * pi / 16.0);
        }
    }
    ct_ = c_.transposed();
}

DctBasis make_dct_basis() {
    return DctBasis{};
}

CoeffBlock dct_forward(const SpatialBlock& b, const DctBasis& basis) {
    return CoeffBlock{basis.c() * b.values * basis.ct()};
}

SpatialBlock dct_inverse(const CoeffBlock& B, const DctBasis& basis) {
    return SpatialBlock{basis.ct() * B.coeffs * basis.c()};
}

}  // namespace dctfuse
