#pragma once

#include <cstdint>
#include <functional>

namespace deformlab {

/// Adaptive interval-halving Simpson quadrature with absolute-error target.
/// `budget` is decremented per function evaluation; exhausting it throws
/// ToleranceNotMet.
double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double tol, std::uint64_t& budget);

/// Convenience overload with a fresh default budget of 1e7 evaluations.
double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double tol);

}  // namespace deformlab
