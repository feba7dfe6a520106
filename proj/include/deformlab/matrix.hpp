#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace deformlab {

/// 2x2 real matrix, row-major: columns are (a,c) and (b,d).
struct Matrix2 {
    double a = 0, b = 0, c = 0, d = 0;

    static Matrix2 identity() { return {1, 0, 0, 1}; }

    /// ad - bc with a compensated product difference (Kahan), accurate to ~1 ulp
    /// even under heavy cancellation.
    double det() const {
        const double w = b * c;
        const double e = std::fma(b, c, -w);
        const double f = std::fma(a, d, -w);
        return f - e;
    }

    double col_norm_1() const { return std::hypot(a, c); }
    double col_norm_2() const { return std::hypot(b, d); }

    double frobenius_sq() const { return a * a + b * b + c * c + d * d; }
    double max_abs() const {
        return std::max(std::max(std::fabs(a), std::fabs(b)),
                        std::max(std::fabs(c), std::fabs(d)));
    }
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    Matrix2 transposed() const { return {a, c, b, d}; }

    friend Matrix2 operator*(double s, const Matrix2& m) {
        return {s * m.a, s * m.b, s * m.c, s * m.d};
    }
    friend Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
};

/// 3x3 real matrix, row-major storage.
struct Matrix3 {
    std::array<double, 9> e{};

    static Matrix3 identity() { return Matrix3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
    static Matrix3 diagonal(double d0, double d1, double d2) {
        return Matrix3{{d0, 0, 0, 0, d1, 0, 0, 0, d2}};
    }

    double& operator()(std::size_t i, std::size_t j) { return e[3 * i + j]; }
    double operator()(std::size_t i, std::size_t j) const { return e[3 * i + j]; }

    std::array<double, 3> col(std::size_t j) const { return {e[j], e[3 + j], e[6 + j]}; }

    double det() const {
        return e[0] * (e[4] * e[8] - e[5] * e[7]) -
               e[1] * (e[3] * e[8] - e[5] * e[6]) +
               e[2] * (e[3] * e[7] - e[4] * e[6]);
    }

    bool is_zero() const {
        for (double v : e)
            if (v != 0) return false;
        return true;
    }

    Matrix3 transposed() const {
        return Matrix3{{e[0], e[3], e[6], e[1], e[4], e[7], e[2], e[5], e[8]}};
    }

    /// A^t A (symmetric, positive semidefinite).
    Matrix3 gram() const {
        Matrix3 g;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                double s = 0;
                for (std::size_t k = 0; k < 3; ++k) s += e[3 * k + i] * e[3 * k + j];
                g(i, j) = s;
            }
        return g;
    }

    friend Matrix3 operator*(double s, const Matrix3& m) {
        Matrix3 r;
        for (std::size_t i = 0; i < 9; ++i) r.e[i] = s * m.e[i];
        return r;
    }
    friend Matrix3 operator*(const Matrix3& l, const Matrix3& r) {
        Matrix3 out;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                double s = 0;
                for (std::size_t k = 0; k < 3; ++k) s += l(i, k) * r(k, j);
                out(i, j) = s;
            }
        return out;
    }
};

}  // namespace deformlab
