#pragma once

#include "dctfuse/raster.hpp"

namespace dctfuse {

// Mean squared pixel difference. Throws on a dimension mismatch.
double mse(const GrayRaster& reference, const GrayRaster& test);

// Mean local structural similarity with the canonical parameters:
// 11x11 Gaussian window, sigma 1.5, K1 = 0.01, K2 = 0.03, L = 255,
// local statistics over valid window placements only. Both dimensions
// must be at least 11.
double ssim(const GrayRaster& reference, const GrayRaster& test);

}  // namespace dctfuse
