#pragma once

#include <cstdint>

#include "deformlab/matrix.hpp"
#include "deformlab/rng.hpp"

namespace deformlab {

enum class EnsembleKind {
    GaussianIID,            ///< i.i.d. standard normal entries, dim 2 or 3
    UniformBall4,           ///< (x,y,z,t) uniform in the 4-ball of given radius, dim 2
    OrderedSimplexColumns,  ///< sorted uniform column norms realized as diagonal matrices
};

struct Ensemble {
    EnsembleKind kind = EnsembleKind::GaussianIID;
    int dim = 2;
    double radius = 1.0;  ///< UniformBall4 only

    static Ensemble gaussian(int dim) { return {EnsembleKind::GaussianIID, dim, 1.0}; }
    static Ensemble ball4(double radius = 1.0) { return {EnsembleKind::UniformBall4, 2, radius}; }
    static Ensemble ordered_simplex(int dim) {
        return {EnsembleKind::OrderedSimplexColumns, dim, 1.0};
    }
};

/// A reproducible stream: the i-th sample is a pure function of (seed, i).
/// Each sample consumes a fixed 16-counter window of the underlying
/// counter generator, so at least 2^48 samples are available per seed.
struct SampleStream {
    std::uint64_t seed = 0;
    Ensemble ensemble;
};

/// Throws DimensionMismatch unless the stream's ensemble has dim 2.
Matrix2 sample_matrix2(const SampleStream& stream, std::uint64_t index);

/// Throws DimensionMismatch unless the stream's ensemble has dim 3.
Matrix3 sample_matrix3(const SampleStream& stream, std::uint64_t index);

}  // namespace deformlab
