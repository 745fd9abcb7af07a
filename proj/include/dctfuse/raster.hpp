#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dctfuse {

// 8-bit grayscale image, row-major. Samples are widened to double at the
// point of use; this type stays integral so bit-exact comparisons and
// round trips are meaningful.
class GrayRaster {
public:
    GrayRaster() = default;

    GrayRaster(int width, int height)
        : width_(width), height_(height),
          samples_(static_cast<std::size_t>(width) * height, 0) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("raster dimensions must be at least 1x1");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    bool empty() const { return samples_.empty(); }

    std::uint8_t at(int x, int y) const {
        return samples_[static_cast<std::size_t>(y) * width_ + x];
    }
    std::uint8_t& at(int x, int y) {
        return samples_[static_cast<std::size_t>(y) * width_ + x];
    }

    const std::vector<std::uint8_t>& samples() const { return samples_; }
    std::vector<std::uint8_t>& samples() { return samples_; }

    friend bool operator==(const GrayRaster& a, const GrayRaster& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ &&
               a.samples_ == b.samples_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> samples_;
};

// Clamp to [0,255] and round half away from zero.
inline std::uint8_t quantize_sample(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

}  // namespace dctfuse
