#include "dctfuse/quality.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dctfuse {

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

std::array<double, kWindow> gaussian_window() {
    std::array<double, kWindow> w{};
    const int half = kWindow / 2;
    double sum = 0.0;
    for (int i = 0; i < kWindow; ++i) {
        const double x = i - half;
        w[i] = std::exp(-(x * x) / (2.0 * kSigma * kSigma));
        sum += w[i];
    }
    for (double& v : w) v /= sum;
    return w;
}

// Separable valid-region convolution with the normalized Gaussian window.
// Input is W x H row-major; output is (W-10) x (H-10).
std::vector<double> gaussian_valid(const std::vector<double>& img, int w, int h) {
    const auto win = gaussian_window();
    const int ow = w - (kWindow - 1);
    const int oh = h - (kWindow - 1);

    std::vector<double> horiz(static_cast<std::size_t>(ow) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (int k = 0; k < kWindow; ++k)
                acc += win[k] * img[static_cast<std::size_t>(y) * w + x + k];
            horiz[static_cast<std::size_t>(y) * ow + x] = acc;
        }
    }

    std::vector<double> out(static_cast<std::size_t>(ow) * oh);
    for (int y = 0; y < oh; ++y) {
        for (int x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (int k = 0; k < kWindow; ++k)
                acc += win[k] * horiz[static_cast<std::size_t>(y + k) * ow + x];
            out[static_cast<std::size_t>(y) * ow + x] = acc;
        }
    }
    return out;
}

std::vector<double> widen(const GrayRaster& img) {
    std::vector<double> out(img.samples().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<double>(img.samples()[i]);
    return out;
}

void require_same_size(const GrayRaster& a, const GrayRaster& b, const char* what) {
    if (a.width() != b.width() || a.height() != b.height())
        throw std::invalid_argument(std::string(what) + ": image dimensions differ");
}

}  // namespace

double mse(const GrayRaster& reference, const GrayRaster& test) {
    require_same_size(reference, test, "mse");
    double acc = 0.0;
    const auto& r = reference.samples();
    const auto& t = test.samples();
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double d = static_cast<double>(r[i]) - static_cast<double>(t[i]);
        acc += d * d;
    }
    return acc / static_cast<double>(r.size());
}

double ssim(const GrayRaster& reference, const GrayRaster& test) {
    require_same_size(reference, test, "ssim");
    const int w = reference.width();
    const int h = reference.height();
    if (w < kWindow || h < kWindow)
        throw std::invalid_argument("ssim: image smaller than the 11x11 window");

    const std::vector<double> img1 = widen(reference);
    const std::vector<double> img2 = widen(test);

    std::vector<double> img1_sq(img1.size()), img2_sq(img1.size()), img12(img1.size());
    for (std::size_t i = 0; i < img1.size(); ++i) {
        img1_sq[i] = img1[i] * img1[i];
        img2_sq[i] = img2[i] * img2[i];
        img12[i] = img1[i] * img2[i];
    }

    const std::vector<double> mu1 = gaussian_valid(img1, w, h);
    const std::vector<double> mu2 = gaussian_valid(img2, w, h);
    const std::vector<double> e11 = gaussian_valid(img1_sq, w, h);
    const std::vector<double> e22 = gaussian_valid(img2_sq, w, h);
    const std::vector<double> e12 = gaussian_valid(img12, w, h);

    double sum = 0.0;
    for (std::size_t i = 0; i < mu1.size(); ++i) {
        const double mu1_sq = mu1[i] * mu1[i];
        const double mu2_sq = mu2[i] * mu2[i];
        const double mu12 = mu1[i] * mu2[i];
        const double sigma1_sq = e11[i] - mu1_sq;
        const double sigma2_sq = e22[i] - mu2_sq;
        const double sigma12 = e12[i] - mu12;
        sum += ((2.0 * mu12 + kC1) * (2.0 * sigma12 + kC2)) /
               ((mu1_sq + mu2_sq + kC1) * (sigma1_sq + sigma2_sq + kC2));
    }
    return sum / static_cast<double>(mu1.size());
}

}  // namespace dctfuse
