#include "deformlab/core3d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "deformlab/errors.hpp"

namespace deformlab {

namespace {

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm3(const std::array<double, 3>& a) {
    return std::sqrt(dot3(a, a));
}

// s(x) and s'(x) with Horner evaluation.
double cubic(const CubicCoeffs& c, double x) {
    return ((x - c.e1) * x + c.e2) * x - c.e3;
}
double cubic_deriv(const CubicCoeffs& c, double x) {
    return (3 * x - 2 * c.e1) * x + c.e2;
}

double newton_polish(const CubicCoeffs& c, double x, double scale) {
    const double d = cubic_deriv(c, x);
    // Skip near multiple roots where the derivative loses meaning.
    if (std::fabs(d) <= 1e-10 * scale * std::fmax(scale, std::fabs(x))) return x;
    return x - cubic(c, x) / d;
}

}  // namespace

GramInvariants gram_invariants(const Matrix3& m) {
    const auto c0 = m.col(0);
    const auto c1 = m.col(1);
    const auto c2 = m.col(2);
    double n[3] = {norm3(c0), norm3(c1), norm3(c2)};
    double nsq[3] = {dot3(c0, c0), dot3(c1, c1), dot3(c2, c2)};
    double d01 = dot3(c0, c1), d02 = dot3(c0, c2), d12 = dot3(c1, c2);
    // Squared areas as 2x2 Gram determinants, clamped at 0 against roundoff.
    const double a12sq = std::fmax(nsq[1] * nsq[2] - d12 * d12, 0.0);  // opposite col 0
    const double a02sq = std::fmax(nsq[0] * nsq[2] - d02 * d02, 0.0);  // opposite col 1
    const double a01sq = std::fmax(nsq[0] * nsq[1] - d01 * d01, 0.0);  // opposite col 2
    GramInvariants g;
    std::sort(n, n + 3);
    g.u = n[0];
    g.v = n[1];
    g.w = n[2];
    g.s1 = std::sqrt(a12sq);
    g.s2 = std::sqrt(a02sq);
    g.s3 = std::sqrt(a01sq);
    g.vol = std::fabs(m.det());
    return g;
}

CubicCoeffs char_poly3(const GramInvariants& g) {
    CubicCoeffs c;
    c.e1 = g.u * g.u + g.v * g.v + g.w * g.w;
    c.e2 = g.s1 * g.s1 + g.s2 * g.s2 + g.s3 * g.s3;
    c.e3 = g.vol * g.vol;
    return c;
}

EigenTriple eig3(const CubicCoeffs& c) {
    // Depressed cubic: x = y + e1/3 gives y^3 + p y + q.
    const double shift = c.e1 / 3;
    const double p = c.e2 - c.e1 * c.e1 / 3;
    const double q = (c.e2 / 3 - (2.0 / 27) * c.e1 * c.e1) * c.e1 - c.e3;
    const double scale = std::fmax(c.e1, std::fmax(std::sqrt(std::fabs(c.e2)), std::cbrt(std::fabs(c.e3))));
    const double scale6 = std::pow(scale, 6);

    const double disc = -4 * p * p * p - 27 * q * q;
    if (disc < -1e-10 * std::fmax(scale6, 1e-300))
        throw ComplexRootsError("characteristic cubic has complex roots; not a Gram spectrum");

    double roots[3];
    // True p is <= 0 for a real-rooted cubic; p at (or within roundoff of) 0
    // means a triple root, where the trigonometric formula only amplifies
    // noise in p.
    const double p_noise =
        4 * std::numeric_limits<double>::epsilon() * std::fmax(c.e1 * c.e1, std::fabs(c.e2));
    if (p >= -p_noise) {
        roots[0] = roots[1] = roots[2] = shift;
    } else {
        const double m = 2 * std::sqrt(-p / 3);
        double arg = 3 * q / (p * m);  // = (3q)/(2p) * sqrt(-3/p)
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg) / 3;
        for (int k = 0; k < 3; ++k)
            roots[k] = shift + m * std::cos(theta - 2 * std::numbers::pi * k / 3);
    }
    std::sort(roots, roots + 3);
    for (double& r : roots) {
        r = newton_polish(c, r, scale);
        r = std::fmax(newton_polish(c, r, scale), 0.0);
    }
    std::sort(roots, roots + 3);
    return {roots[0], roots[1], roots[2]};
}

double k3(const Matrix3& m) {
    return std::sqrt(k3_squared(m));
}

double k3_squared(const Matrix3& m) {
    const EigenTriple x = eig3(char_poly3(gram_invariants(m)));
    if (x.x3 == 0) throw ZeroMatrixError{};
    return x.x1 / x.x3;
}

double column_bound3(const Matrix3& m) {
    const GramInvariants g = gram_invariants(m);
    if (g.u == 0) throw ZeroColumnError{};
    return g.u / g.w;
}

InterlaceVerdict interlace_check(const Matrix3& m, std::optional<double> tol) {
    const GramInvariants g = gram_invariants(m);
    const CubicCoeffs c = char_poly3(g);
    const EigenTriple x = eig3(c);
    const double t = tol.value_or(1e-9 * c.e1);
    const double margin = std::fmin(g.u * g.u - x.x1, x.x3 - g.w * g.w);
    return {margin >= -t, margin};
}

}  // namespace deformlab
