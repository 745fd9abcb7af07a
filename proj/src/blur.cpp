#include "dctfuse/blur.hpp"

#include <stdexcept>

namespace dctfuse {

namespace {

// Mirror with edge repetition: -1 -> 0, -2 -> 1, n -> n-1, n+1 -> n-2.
int mirror_index(int i, int n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - i - 1;
    }
    return i;
}

}  // namespace

GrayRaster box_filter(const GrayRaster& image, int kernel_size) {
    if (kernel_size < 1 || kernel_size % 2 == 0)
        throw std::invalid_argument("box_filter: kernel size must be odd, >= 1");
    const int w = image.width();
    const int h = image.height();
    const int reach = kernel_size / 2;
    const double inv = 1.0 / kernel_size;

    std::vector<double> horiz(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = -reach; k <= reach; ++k)
                acc += image.at(mirror_index(x + k, w), y);
            horiz[static_cast<std::size_t>(y) * w + x] = acc * inv;
        }
    }

    GrayRaster out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = -reach; k <= reach; ++k)
                acc += horiz[static_cast<std::size_t>(mirror_index(y + k, h)) * w + x];
            out.at(x, y) = quantize_sample(acc * inv);
        }
    }
    return out;
}

GrayRaster synthetic_blur(const GrayRaster& image, const BlurSpec& spec) {
    if (image.width() < 2 * spec.kernel_size)
        throw std::invalid_argument("synthetic_blur: image too small for the kernel");

    const GrayRaster blurred = box_filter(image, spec.kernel_size);
    const int split = image.width() / 2;

    GrayRaster out = image;
    const int x0 = (spec.side == BlurSide::kLeft) ? 0 : split;
    const int x1 = (spec.side == BlurSide::kLeft) ? split : image.width();
    for (int y = 0; y < image.height(); ++y)
        for (int x = x0; x < x1; ++x) out.at(x, y) = blurred.at(x, y);
    return out;
}

std::vector<MultiFocusPair> make_pairs(const std::vector<GrayRaster>& images) {
    std::vector<MultiFocusPair> pairs;
    pairs.reserve(images.size() * 2);
    for (const GrayRaster& img : images) {
        for (const int k : {5, 9}) {
            MultiFocusPair pair;
            pair.left_blurred = synthetic_blur(img, {BlurSide::kLeft, k});
            pair.right_blurred = synthetic_blur(img, {BlurSide::kRight, k});
            pair.source = img;
            pair.kernel_size = k;
            pairs.push_back(std::move(pair));
        }
    }
    return pairs;
}

}  // namespace dctfuse
