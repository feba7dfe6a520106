#pragma once

#include "deformlab/matrix.hpp"

namespace deformlab {

/// Singular values in descending order. p*q == |det| holds by construction.
struct SingularPair {
    double p = 0;  ///< larger
    double q = 0;  ///< smaller
};

/// Rotation/reflection split of a 2x2 matrix.
///
/// Writing a = x+y, d = x-y, b = z+t, c = z-t, the matrix decomposes into a
/// conformal part with radius r = sqrt(x^2 + t^2) and an anti-conformal part
/// with radius rho = sqrt(y^2 + z^2). Angles follow x = r sin(alpha),
/// t = r cos(alpha), y = rho sin(beta), z = rho cos(beta). The singular values
/// are r + rho and |r - rho|, so k = |r - rho| / (r + rho).
struct PolarForm {
    double r = 0;
    double rho = 0;
    double alpha = 0;  ///< in [0, 2*pi); canonicalized to 0 when r == 0
    double beta = 0;   ///< in [0, 2*pi); canonicalized to 0 when rho == 0
};

/// Singular values via the cancellation-free closed form:
/// p = sqrt((T + sqrt((T-2|D|)(T+2|D|)))/2), q = |D|/p, with T the squared
/// Frobenius norm and D the determinant. Zero matrix yields (0, 0).
SingularPair singular_pair(const Matrix2& m);

/// Deformation coefficient q/p in [0, 1]. Throws ZeroMatrixError on the zero
/// matrix; singular matrices return 0.
double k2(const Matrix2& m);

PolarForm to_polar(const Matrix2& m);
Matrix2 from_polar(const PolarForm& p);

/// |r - rho| / (r + rho). Throws ZeroMatrixError when r == rho == 0.
double k2_polar(const PolarForm& p);

/// Smaller column norm over larger; an upper bound for k2. Throws
/// ZeroColumnError when a column is zero.
double column_bound2(const Matrix2& m);

}  // namespace deformlab
