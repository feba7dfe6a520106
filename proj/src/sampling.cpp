#include "deformlab/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "deformlab/errors.hpp"

namespace deformlab {

namespace {

constexpr std::uint64_t kStride = 16;  // counters reserved per sample

}  // namespace

Matrix2 sample_matrix2(const SampleStream& stream, std::uint64_t index) {
    if (stream.ensemble.dim != 2)
        throw DimensionMismatch("stream ensemble is not 2-dimensional");
    const CounterRng rng(stream.seed);
    const std::uint64_t c = index * kStride;
    switch (stream.ensemble.kind) {
        case EnsembleKind::GaussianIID: {
            const auto [a, b] = rng.gaussian_pair(c);
            const auto [cc, d] = rng.gaussian_pair(c + 2);
            return {a, b, cc, d};
        }
        case EnsembleKind::UniformBall4: {
            // Uniform point in the 4-ball: Gaussian direction, radius R * U^(1/4).
            const auto [g0, g1] = rng.gaussian_pair(c);
            const auto [g2, g3] = rng.gaussian_pair(c + 2);
            const double norm = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2 + g3 * g3);
            const double scale =
                norm > 0
                    ? stream.ensemble.radius * std::pow(rng.uniform(c + 4), 0.25) / norm
                    : 0.0;
            const double x = scale * g0, y = scale * g1, z = scale * g2, t = scale * g3;
            return {x + y, z + t, z - t, x - y};
        }
        case EnsembleKind::OrderedSimplexColumns: {
            double hi = rng.uniform(c);
            double lo = rng.uniform(c + 1);
            if (lo > hi) std::swap(lo, hi);
            return {hi, 0, 0, lo};
        }
    }
    throw DimensionMismatch("unknown ensemble kind");
}

Matrix3 sample_matrix3(const SampleStream& stream, std::uint64_t index) {
    if (stream.ensemble.dim != 3)
        throw DimensionMismatch("stream ensemble is not 3-dimensional");
    const CounterRng rng(stream.seed);
    const std::uint64_t c = index * kStride;
    switch (stream.ensemble.kind) {
        case EnsembleKind::GaussianIID: {
            Matrix3 m;
            for (std::uint64_t pair = 0; pair < 5; ++pair) {
                const auto [g0, g1] = rng.gaussian_pair(c + 2 * pair);
                if (2 * pair < 9) m.e[2 * pair] = g0;
                if (2 * pair + 1 < 9) m.e[2 * pair + 1] = g1;
            }
            return m;
        }
        case EnsembleKind::OrderedSimplexColumns: {
            double n[3] = {rng.uniform(c), rng.uniform(c + 1), rng.uniform(c + 2)};
            std::sort(n, n + 3);
            return Matrix3::diagonal(n[2], n[1], n[0]);
        }
        case EnsembleKind::UniformBall4:
            break;
    }
    throw DimensionMismatch("ensemble not defined in dimension 3");
}

}  // namespace deformlab
