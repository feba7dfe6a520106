#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "deformlab/sampling.hpp"

namespace deformlab {

enum class Method { exact, quadrature, monte_carlo };

std::string method_name(Method m);

/// A numerical result with its provenance. std_error is meaningful only for
/// monte_carlo results (0 otherwise). `elapsed` is wall-clock seconds and is
/// never part of serialized output.
struct Estimate {
    double value = 0;
    double std_error = 0;
    std::uint64_t n = 0;  ///< samples (MC) or function evaluations (quadrature)
    Method method = Method::exact;
    std::optional<std::uint64_t> seed;
    double elapsed = 0;
    std::uint64_t skipped = 0;  ///< zero-matrix samples skipped (MC only)
};

enum class Statistic { k2, k3, column_ratio };

std::string statistic_name(Statistic s);

/// The ordered-domain mean constant 3 - 4 ln 2.
Estimate mean_k2_exact();

/// F(r, rho) = -rho^2/2 + 2 rho r - 2 r^2 ln(r + rho); the antiderivative in
/// rho of rho (r - rho)/(r + rho). Throws DomainError at r == rho == 0.
double inner_antiderivative(double r, double rho);

/// The ordered-domain nested integral
///   int_0^R r dr int_0^r rho (r-rho)/(r+rho) drho / int_0^R r dr int_0^r rho drho
/// evaluated semi-analytically (inner integral via inner_antiderivative, outer
/// via adaptive quadrature to `tol`). The ratio is R-independent; R defaults
/// to 1 and is exposed for the scale-invariance check. Requires
/// 1e-14 <= tol <= 1e-4.
Estimate mean_k2_quadrature(double tol, double outer_radius = 1.0);

/// Sample mean and standard error of the statistic over the first n samples
/// of the stream. Deterministic given (seed, n), independent of thread count.
Estimate mean_monte_carlo(const SampleStream& stream, Statistic statistic,
                          std::uint64_t n, bool parallel = true);

/// The ordered-simplex column-ratio integral: 1/2 in dim 2, 1/3 in dim 3.
Estimate bound_mean_quadrature(int dim);

}  // namespace deformlab
