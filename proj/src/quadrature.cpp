#include "deformlab/quadrature.hpp"

#include <cmath>

#include "deformlab/errors.hpp"

namespace deformlab {

namespace {

constexpr std::uint64_t kDefaultBudget = 10'000'000;

double eval(const std::function<double(double)>& f, double x, std::uint64_t& budget) {
    if (budget == 0) throw ToleranceNotMet("quadrature evaluation budget exhausted");
    --budget;
    return f(x);
}

// Nested rule: Simpson on [a,b] vs two half-interval Simpsons, with the
// standard |S2 - S1|/15 error estimate and Richardson-extrapolated return.
double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth,
                   std::uint64_t& budget) {
    const double m = (a + b) / 2;
    const double lm = (a + m) / 2;
    const double rm = (m + b) / 2;
    const double flm = eval(f, lm, budget);
    const double frm = eval(f, rm, budget);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double err = (left + right - whole) / 15;
    if (depth > 0 && std::fabs(err) > tol) {
        return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1, budget) +
               simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1, budget);
    }
    return left + right + err;
}

}  // namespace

double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double tol, std::uint64_t& budget) {
    if (a == b) return 0.0;
    const double fa = eval(f, a, budget);
    const double m = (a + b) / 2;
    const double fm = eval(f, m, budget);
    const double fb = eval(f, b, budget);
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 60, budget);
}

double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double tol) {
    std::uint64_t budget = kDefaultBudget;
    return adaptive_quadrature(f, a, b, tol, budget);
}

}  // namespace deformlab
