#pragma once

#include <array>
#include <cmath>

namespace dctfuse {

// Dense 8x8 double matrix, row-major. Every block-level computation in
// this project is fixed at this size, so plain cubic products are used
// throughout.
class Mat8 {
public:
    static constexpr int kN = 8;

    constexpr Mat8() : v_{} {}

    double& operator()(int row, int col) { return v_[row * kN + col]; }
    double operator()(int row, int col) const { return v_[row * kN + col]; }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }

    Mat8 transposed() const {
        Mat8 t;
        for (int r = 0; r < kN; ++r)
            for (int c = 0; c < kN; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    static Mat8 identity() {
        Mat8 m;
        for (int i = 0; i < kN; ++i) m(i, i) = 1.0;
        return m;
    }

    Mat8& operator+=(const Mat8& o) {
        for (int i = 0; i < kN * kN; ++i) v_[i] += o.v_[i];
        return *this;
    }

    Mat8& operator-=(const Mat8& o) {
        for (int i = 0; i < kN * kN; ++i) v_[i] -= o.v_[i];
        return *this;
    }

    Mat8& operator*=(double s) {
        for (double& x : v_) x *= s;
        return *this;
    }

private:
    std::array<double, kN * kN> v_;
};

inline Mat8 operator*(const Mat8& a, const Mat8& b) {
    Mat8 out;
    for (int r = 0; r < Mat8::kN; ++r) {
        for (int k = 0; k < Mat8::kN; ++k) {
            const double ark = a(r, k);
            for (int c = 0; c < Mat8::kN; ++c) out(r, c) += ark * b(k, c);
        }
    }
    return out;
}

inline Mat8 operator+(Mat8 a, const Mat8& b) {
    a += b;
    return a;
}

inline Mat8 operator-(Mat8 a, const Mat8& b) {
    a -= b;
    return a;
}

inline Mat8 operator*(double s, Mat8 a) {
    a *= s;
    return a;
}

// Sum of squared entries, i.e. trace(x * x^t) written as the diagonal of
// the product.
inline double frobenius_trace(const Mat8& x) {
    double sum = 0.0;
    for (int r = 0; r < Mat8::kN; ++r) {
        double diag = 0.0;
        for (int c = 0; c < Mat8::kN; ++c) diag += x(r, c) * x(r, c);
        sum += diag;
    }
    return sum;
}

inline double max_abs_diff(const Mat8& a, const Mat8& b) {
    double m = 0.0;
    for (int r = 0; r < Mat8::kN; ++r)
        for (int c = 0; c < Mat8::kN; ++c)
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

}  // namespace dctfuse
