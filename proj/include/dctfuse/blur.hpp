#pragma once

#include <vector>

#include "dctfuse/raster.hpp"

namespace dctfuse {

enum class BlurSide { kLeft, kRight };

// Normalized box-mean defocus: kernel_size is 5 or 9.
struct BlurSpec {
    BlurSide side = BlurSide::kLeft;
    int kernel_size = 5;
};

// Full-image normalized box filter with symmetric (edge-inclusive mirror)
// boundary handling, quantized back to 8 bits.
GrayRaster box_filter(const GrayRaster& image, int kernel_size);

// Replace one half of the image (columns [0, W/2) or [W/2, W)) with its
// box-filtered version; the filter runs over the whole image first, then
// the half is spliced in. Requires width >= 2 * kernel_size.
GrayRaster synthetic_blur(const GrayRaster& image, const BlurSpec& spec);

// One artificial multi-focus pair plus the ground truth it came from.
struct MultiFocusPair {
    GrayRaster left_blurred;   // sharp on the right
    GrayRaster right_blurred;  // sharp on the left
    GrayRaster source;
    int kernel_size = 0;
};

// Complementary half-blur pairs for each image and each kernel size in
// {5, 9}: K images yield 2K pairs.
std::vector<MultiFocusPair> make_pairs(const std::vector<GrayRaster>& images);

}  // namespace dctfuse
