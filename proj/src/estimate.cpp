#include "deformlab/estimate.hpp"

#include <chrono>
#include <cmath>

#include "deformlab/core2d.hpp"
#include "deformlab/core3d.hpp"
#include "deformlab/errors.hpp"
#include "deformlab/parallel.hpp"
#include "deformlab/quadrature.hpp"

namespace deformlab {

namespace {

constexpr std::uint64_t kBlock = 4096;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct McAcc {
    double sum = 0;
    double sumsq = 0;
    std::uint64_t count = 0;
    std::uint64_t skipped = 0;
};

McAcc combine(const McAcc& a, const McAcc& b) {
    return {a.sum + b.sum, a.sumsq + b.sumsq, a.count + b.count, a.skipped + b.skipped};
}

double eval_statistic2(const Matrix2& m, Statistic s) {
    return s == Statistic::k2 ? k2(m) : column_bound2(m);
}

double eval_statistic3(const Matrix3& m, Statistic s) {
    return s == Statistic::k3 ? k3(m) : column_bound3(m);
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::quadrature: return "quadrature";
        case Method::monte_carlo: return "monte_carlo";
    }
    return "?";
}

std::string statistic_name(Statistic s) {
    switch (s) {
        case Statistic::k2: return "k2";
        case Statistic::k3: return "k3";
        case Statistic::column_ratio: return "column_ratio";
    }
    return "?";
}

Estimate mean_k2_exact() {
    Estimate e;
    e.value = 3 - 4 * std::log(2.0);
    e.method = Method::exact;
    e.n = 1;
    return e;
}

double inner_antiderivative(double r, double rho) {
    if (r == 0 && rho == 0)
        throw DomainError("inner antiderivative undefined at r = rho = 0");
    return -rho * rho / 2 + 2 * rho * r - 2 * r * r * std::log(r + rho);
}

Estimate mean_k2_quadrature(double tol, double outer_radius) {
    if (!(tol >= 1e-14 && tol <= 1e-4))
        throw DomainError("quadrature tolerance must lie in [1e-14, 1e-4]");
    if (!(outer_radius > 0)) throw DomainError("outer radius must be positive");
    const auto t0 = Clock::now();
    const double radius = outer_radius;

    // Numerator integrand r * (F(r,r) - F(r,0)); the limit at r = 0 is 0.
    auto numerator_integrand = [](double r) {
        if (r == 0) return 0.0;
        return r * (inner_antiderivative(r, r) - inner_antiderivative(r, 0));
    };
    // Denominator integrand r * r^2/2 (inner integral of rho over [0, r]).
    auto denominator_integrand = [](double r) { return r * r * r / 2; };

    const double scale = radius * radius * radius * radius;
    std::uint64_t budget = 10'000'000;
    const std::uint64_t budget0 = budget;
    const double den =
        adaptive_quadrature(denominator_integrand, 0, radius, tol * scale / 16, budget);
    const double num =
        adaptive_quadrature(numerator_integrand, 0, radius, tol * den / 4, budget);

    Estimate e;
    e.value = num / den;
    e.method = Method::quadrature;
    e.n = budget0 - budget;
    e.elapsed = seconds_since(t0);
    return e;
}

Estimate mean_monte_carlo(const SampleStream& stream, Statistic statistic,
                          std::uint64_t n, bool parallel) {
    if (n < 2) throw DomainError("Monte Carlo estimation needs n >= 2");
    const int need_dim = statistic == Statistic::k2   ? 2
                         : statistic == Statistic::k3 ? 3
                                                      : stream.ensemble.dim;
    if (stream.ensemble.dim != need_dim)
        throw DimensionMismatch("statistic dimension does not match ensemble dimension");

    const auto t0 = Clock::now();
    const bool dim2 = stream.ensemble.dim == 2;
    auto block_fn = [&](std::uint64_t begin, std::uint64_t end) {
        McAcc acc;
        for (std::uint64_t i = begin; i < end; ++i) {
            double value;
            if (dim2) {
                const Matrix2 m = sample_matrix2(stream, i);
                if (m.is_zero()) {
                    ++acc.skipped;
                    continue;
                }
                value = eval_statistic2(m, statistic);
            } else {
                const Matrix3 m = sample_matrix3(stream, i);
                if (m.is_zero()) {
                    ++acc.skipped;
                    continue;
                }
                value = eval_statistic3(m, statistic);
            }
            acc.sum += value;
            acc.sumsq += value * value;
            ++acc.count;
        }
        return acc;
    };
    const McAcc acc = block_reduce<McAcc>(n, kBlock, block_fn, combine, parallel);

    Estimate e;
    e.method = Method::monte_carlo;
    e.seed = stream.seed;
    e.n = acc.count;
    e.skipped = acc.skipped;
    const double cnt = static_cast<double>(acc.count);
    e.value = acc.sum / cnt;
    const double var = std::fmax(acc.sumsq - acc.sum * acc.sum / cnt, 0.0) / (cnt - 1);
    e.std_error = std::sqrt(var / cnt);
    e.elapsed = seconds_since(t0);
    return e;
}

Estimate bound_mean_quadrature(int dim) {
    if (dim != 2 && dim != 3) throw DomainError("dim must be 2 or 3");
    const auto t0 = Clock::now();
    std::uint64_t budget = 10'000'000;
    const std::uint64_t budget0 = budget;
    const double tol = 1e-12;
    double num, den;
    if (dim == 2) {
        // int_0^1 dy int_0^y (z/y) dz  over  int_0^1 dy int_0^y dz
        auto num_outer = [&](double y) {
            if (y == 0) return 0.0;
            std::uint64_t inner_budget = 100'000;
            return adaptive_quadrature([y](double z) { return z / y; }, 0, y, tol / 8,
                                       inner_budget);
        };
        auto den_outer = [&](double y) { return y; };
        num = adaptive_quadrature(num_outer, 0, 1, tol / 8, budget);
        den = adaptive_quadrature(den_outer, 0, 1, tol / 8, budget);
    } else {
        // int_0^1 dw int_0^w dv int_0^v (u/w) du  over the same domain volume
        auto num_outer = [&](double w) {
            if (w == 0) return 0.0;
            std::uint64_t mid_budget = 1'000'000;
            return adaptive_quadrature(
                [&](double v) {
                    std::uint64_t inner_budget = 100'000;
                    return adaptive_quadrature([w](double u) { return u / w; }, 0, v,
                                               tol / 64, inner_budget);
                },
                0, w, tol / 16, mid_budget);
        };
        auto den_outer = [&](double w) { return w * w / 2; };
        num = adaptive_quadrature(num_outer, 0, 1, tol / 8, budget);
        den = adaptive_quadrature(den_outer, 0, 1, tol / 8, budget);
    }
    Estimate e;
    e.value = num / den;
    e.method = Method::quadrature;
    e.n = budget0 - budget;
    e.elapsed = seconds_since(t0);
    return e;
}

}  // namespace deformlab
