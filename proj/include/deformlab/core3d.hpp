#pragma once

#include <optional>

#include "deformlab/matrix.hpp"

namespace deformlab {

/// Column geometry of a 3x3 matrix: sorted column norms u <= v <= w,
/// parallelogram areas s1, s2, s3 of the column pairs, and |det|.
struct GramInvariants {
    double u = 0, v = 0, w = 0;
    double s1 = 0, s2 = 0, s3 = 0;
    double vol = 0;
};

/// Coefficients of the characteristic cubic of A^t A:
/// s(x) = x^3 - e1 x^2 + e2 x - e3.
struct CubicCoeffs {
    double e1 = 0;  ///< u^2 + v^2 + w^2
    double e2 = 0;  ///< s1^2 + s2^2 + s3^2
    double e3 = 0;  ///< vol^2
};

/// Roots of the characteristic cubic, ascending: the squared singular values.
struct EigenTriple {
    double x1 = 0, x2 = 0, x3 = 0;
};

struct InterlaceVerdict {
    bool holds = true;
    double margin = 0;  ///< min(u^2 - x1, x3 - w^2); negative when violated
};

GramInvariants gram_invariants(const Matrix3& m);

CubicCoeffs char_poly3(const GramInvariants& g);

/// Real roots of the cubic via the trigonometric method (acos argument
/// clamped), one Newton polish per root, tiny negatives clamped to zero.
/// Throws ComplexRootsError when the discriminant is materially negative,
/// which cannot happen for coefficients of a genuine Gram matrix.
EigenTriple eig3(const CubicCoeffs& c);

/// Deformation coefficient sqrt(x1/x3): smallest over largest singular value.
/// Throws ZeroMatrixError on the zero matrix.
double k3(const Matrix3& m);

/// Squared-ratio variant x1/x3, exposed for comparison.
double k3_squared(const Matrix3& m);

/// u/w, an upper bound for k3. Throws ZeroColumnError when a column is zero.
double column_bound3(const Matrix3& m);

/// Checks x1 <= u^2 and w^2 <= x3 within tol (absolute). When tol is not
/// given it defaults to 1e-9 * e1, scale-relative.
InterlaceVerdict interlace_check(const Matrix3& m, std::optional<double> tol = std::nullopt);

}  // namespace deformlab
