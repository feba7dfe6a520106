#pragma once

#include <cstdint>
#include <vector>

#include "deformlab/core2d.hpp"
#include "deformlab/core3d.hpp"

namespace deformlab {

/// Outcome of a seeded mass verification run. For the interlacing campaign,
/// worst_margin is the most negative scale-relative slack observed; for the
/// equivalence campaigns it is the worst deviation. A pure function of
/// (seed, n, tol) regardless of parallel partitioning.
struct CampaignReport {
    std::uint64_t n = 0;
    std::uint64_t violations = 0;
    double worst_margin = 0;
    std::vector<double> worst_input;  ///< offending matrix, row-major; empty if none flagged
    std::uint64_t seed = 0;
    double tol = 0;
};

/// Singular values via one-sided Jacobi rotations iterated to machine
/// precision; shares no arithmetic with the closed form in core2d.
SingularPair svd_oracle2(const Matrix2& m);

/// Eigenvalues of a symmetric 3x3 matrix via cyclic Jacobi iteration,
/// ascending. Throws NonConvergence after a fixed sweep budget.
EigenTriple eig_oracle3(const Matrix3& sym);

/// The interlacing check x1 <= u^2 <= w^2 <= x3 over n seeded Gaussian 3x3
/// samples plus a fixed adversarial battery (scalar, rank-deficient,
/// near-tied, permutation, ill-conditioned matrices). tol_rel is the
/// scale-relative tolerance (multiplied by e1 per sample).
CampaignReport interlacing_campaign(std::uint64_t seed, std::uint64_t n,
                                    double tol_rel = 1e-9, bool parallel = true);

/// Worst deviation between the closed forms and the Jacobi oracles over n
/// Gaussian samples. dim 2 compares k2 against the one-sided SVD oracle
/// (deviation on the [0,1] scale); dim 3 compares eig3 roots against the
/// cyclic Jacobi oracle on A^t A (deviation relative to the trace e1).
/// A deviation above 1e-9 counts as a violation.
CampaignReport equivalence_campaign(std::uint64_t seed, std::uint64_t n, int dim,
                                    bool parallel = true);

/// The fixed adversarial battery used by interlacing_campaign, exposed for
/// direct testing.
std::vector<Matrix3> adversarial_battery3();

}  // namespace deformlab
