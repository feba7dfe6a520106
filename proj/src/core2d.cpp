#include "deformlab/core2d.hpp"

#include <cmath>
#include <numbers>

#include "deformlab/errors.hpp"

namespace deformlab {

namespace {

// atan2 wrapped to [0, 2*pi); angle of the point (s, c) with s = R*sin, c = R*cos.
double angle_of(double s, double c) {
    double a = std::atan2(s, c);
    if (a < 0) a += 2 * std::numbers::pi;
    return a;
}

}  // namespace

SingularPair singular_pair(const Matrix2& m) {
    // The discriminant T^2 - 4D^2 factors exactly as
    // ((a+d)^2 + (b-c)^2) * ((a-d)^2 + (b+c)^2) = (2r)^2 (2rho)^2 with the
    // conformal radii r, rho, and the larger singular value is r + rho: a
    // sum of nonnegative hypots, free of cancellation. q then comes from
    // p q = |D| rather than the subtractive radical, which loses all digits
    // when q << p.
    const double x = (m.a + m.d) / 2;
    const double y = (m.a - m.d) / 2;
    const double z = (m.b + m.c) / 2;
    const double t = (m.b - m.c) / 2;
    const double p = std::hypot(x, t) + std::hypot(y, z);
    const double q = p > 0 ? std::fabs(m.det()) / p : 0.0;
    return {p, q};
}

double k2(const Matrix2& m) {
    const SingularPair s = singular_pair(m);
    if (s.p == 0) throw ZeroMatrixError{};
    return s.q / s.p;
}

PolarForm to_polar(const Matrix2& m) {
    const double x = (m.a + m.d) / 2;
    const double y = (m.a - m.d) / 2;
    const double z = (m.b + m.c) / 2;
    const double t = (m.b - m.c) / 2;
    PolarForm p;
    p.r = std::hypot(x, t);
    p.rho = std::hypot(y, z);
    p.alpha = p.r > 0 ? angle_of(x, t) : 0.0;
    p.beta = p.rho > 0 ? angle_of(y, z) : 0.0;
    return p;
}

Matrix2 from_polar(const PolarForm& p) {
    const double x = p.r * std::sin(p.alpha);
    const double t = p.r * std::cos(p.alpha);
    const double y = p.rho * std::sin(p.beta);
    const double z = p.rho * std::cos(p.beta);
    return {x + y, z + t, z - t, x - y};
}

double k2_polar(const PolarForm& p) {
    if (p.r == 0 && p.rho == 0) throw ZeroMatrixError{};
    return std::fabs(p.r - p.rho) / (p.r + p.rho);
}

double column_bound2(const Matrix2& m) {
    const double n1 = m.col_norm_1();
    const double n2 = m.col_norm_2();
    if (n1 == 0 || n2 == 0) throw ZeroColumnError{};
    return std::fmin(n1, n2) / std::fmax(n1, n2);
}

}  // namespace deformlab
