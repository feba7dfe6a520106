#include "deformlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "deformlab/errors.hpp"
#include "deformlab/parallel.hpp"
#include "deformlab/sampling.hpp"

namespace deformlab {

namespace {

constexpr std::uint64_t kBlock = 4096;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Hestenes rotation zeroing the inner product of two column vectors.
void orthogonalize(double& u0, double& u1, double& v0, double& v1) {
    const double p11 = u0 * u0 + u1 * u1;
    const double p22 = v0 * v0 + v1 * v1;
    const double p12 = u0 * v0 + u1 * v1;
    if (p12 == 0) return;
    const double tau = (p22 - p11) / (2 * p12);
    const double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1 + tau * tau));
    const double c = 1 / std::sqrt(1 + t * t);
    const double s = c * t;
    const double nu0 = c * u0 - s * v0, nu1 = c * u1 - s * v1;
    const double nv0 = s * u0 + c * v0, nv1 = s * u1 + c * v1;
    u0 = nu0; u1 = nu1; v0 = nv0; v1 = nv1;
}

struct CampaignAcc {
    std::uint64_t violations = 0;
    double worst = std::numeric_limits<double>::infinity();  // min for margins
    bool have_worst = false;
    Matrix3 worst_m3;
    Matrix2 worst_m2;
};

// Keeps the earlier block on ties, so the reduction is order-deterministic.
CampaignAcc combine_min(const CampaignAcc& a, const CampaignAcc& b) {
    CampaignAcc out = a;
    out.violations = a.violations + b.violations;
    if (b.have_worst && (!a.have_worst || b.worst < a.worst)) {
        out.worst = b.worst;
        out.have_worst = b.have_worst;
        out.worst_m3 = b.worst_m3;
        out.worst_m2 = b.worst_m2;
    }
    return out;
}

struct DevAcc {
    std::uint64_t violations = 0;
    double worst = 0;  // max deviation
    bool have_worst = false;
    Matrix3 worst_m3;
    Matrix2 worst_m2;
};

DevAcc combine_max(const DevAcc& a, const DevAcc& b) {
    DevAcc out = a;
    out.violations = a.violations + b.violations;
    if (b.have_worst && (!a.have_worst || b.worst > a.worst)) {
        out.worst = b.worst;
        out.have_worst = b.have_worst;
        out.worst_m3 = b.worst_m3;
        out.worst_m2 = b.worst_m2;
    }
    return out;
}

// Scale-relative interlacing margin; 0 for the zero matrix (all four
// quantities vanish).
double interlace_margin_rel(const Matrix3& m) {
    const GramInvariants g = gram_invariants(m);
    const CubicCoeffs c = char_poly3(g);
    if (c.e1 == 0) return 0.0;
    const EigenTriple x = eig3(c);
    return std::fmin(g.u * g.u - x.x1, x.x3 - g.w * g.w) / c.e1;
}

}  // namespace

SingularPair svd_oracle2(const Matrix2& m) {
    double u0 = m.a, u1 = m.c;  // column 1
    double v0 = m.b, v1 = m.d;  // column 2
    for (int sweep = 0; sweep < 30; ++sweep) {
        const double p12 = u0 * v0 + u1 * v1;
        const double p11 = u0 * u0 + u1 * u1;
        const double p22 = v0 * v0 + v1 * v1;
        if (std::fabs(p12) <= kEps * std::sqrt(p11) * std::sqrt(p22)) break;
        orthogonalize(u0, u1, v0, v1);
    }
    const double n1 = std::hypot(u0, u1);
    const double n2 = std::hypot(v0, v1);
    return {std::fmax(n1, n2), std::fmin(n1, n2)};
}

EigenTriple eig_oracle3(const Matrix3& sym) {
    Matrix3 a = sym;
    const double fro = std::sqrt(a.e[0] * a.e[0] + a.e[1] * a.e[1] + a.e[2] * a.e[2] +
                                 a.e[3] * a.e[3] + a.e[4] * a.e[4] + a.e[5] * a.e[5] +
                                 a.e[6] * a.e[6] + a.e[7] * a.e[7] + a.e[8] * a.e[8]);
    bool converged = fro == 0;
    for (int sweep = 0; sweep < 30 && !converged; ++sweep) {
        static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (const auto& pq : pairs) {
            const int p = pq[0], q = pq[1];
            const double apq = a(p, q);
            if (std::fabs(apq) <= kEps * fro) continue;
            const double tau = (a(q, q) - a(p, p)) / (2 * apq);
            const double t =
                (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1 + tau * tau));
            const double c = 1 / std::sqrt(1 + t * t);
            const double s = c * t;
            // A <- J^t A J with the rotation in the (p, q) plane.
            for (int k = 0; k < 3; ++k) {
                const double akp = a(k, p), akq = a(k, q);
                a(k, p) = c * akp - s * akq;
                a(k, q) = s * akp + c * akq;
            }
            for (int k = 0; k < 3; ++k) {
                const double apk = a(p, k), aqk = a(q, k);
                a(p, k) = c * apk - s * aqk;
                a(q, k) = s * apk + c * aqk;
            }
        }
        const double off = std::sqrt(a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) +
                                     a(1, 2) * a(1, 2));
        converged = off <= kEps * fro;
    }
    if (!converged) throw NonConvergence("cyclic Jacobi did not converge in 30 sweeps");
    double d[3] = {a(0, 0), a(1, 1), a(2, 2)};
    std::sort(d, d + 3);
    return {d[0], d[1], d[2]};
}

std::vector<Matrix3> adversarial_battery3() {
    std::vector<Matrix3> battery;
    // Scalar matrices: quadruple ties x1 = u^2 = w^2 = x3.
    for (double s : {1.0, 5.0, 1e-8, 1e8}) battery.push_back(s * Matrix3::identity());
    battery.push_back(Matrix3{});  // zero matrix
    // Rank-deficient: third column is the sum of the first two.
    battery.push_back(Matrix3{{1, 2, 3, 4, 5, 9, 7, 8, 15}});
    battery.push_back(Matrix3{{1, 1, 2, 0, 1, 1, 0, 0, 0}});
    // Near-tied column norms w ~ v.
    battery.push_back(Matrix3::diagonal(1, 1 - 1e-13, 0.5));
    battery.push_back(Matrix3::diagonal(1 + 1e-14, 1, 1 - 1e-14));
    // All six permutation matrices.
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
        Matrix3 m;
        for (int i = 0; i < 3; ++i) m(i, p[i]) = 1;
        battery.push_back(m);
    }
    // Ill-conditioned diagonals.
    for (double eps : {1e-8, 1e-150, 1e-300})
        battery.push_back(Matrix3::diagonal(1, 1, eps));
    // Triangular ones.
    battery.push_back(Matrix3{{1, 1, 1, 0, 1, 1, 0, 0, 1}});
    return battery;
}

CampaignReport interlacing_campaign(std::uint64_t seed, std::uint64_t n, double tol_rel,
                                    bool parallel) {
    const SampleStream stream{seed, Ensemble::gaussian(3)};
    auto judge = [tol_rel](const Matrix3& m, CampaignAcc& acc) {
        const double margin = interlace_margin_rel(m);
        if (margin < -tol_rel) ++acc.violations;
        if (!acc.have_worst || margin < acc.worst) {
            acc.worst = margin;
            acc.have_worst = true;
            acc.worst_m3 = m;
        }
    };

    CampaignAcc battery_acc;
    for (const Matrix3& m : adversarial_battery3()) judge(m, battery_acc);

    auto block_fn = [&](std::uint64_t begin, std::uint64_t end) {
        CampaignAcc acc;
        for (std::uint64_t i = begin; i < end; ++i) judge(sample_matrix3(stream, i), acc);
        return acc;
    };
    CampaignAcc acc = block_reduce<CampaignAcc>(n, kBlock, block_fn, combine_min, parallel);
    acc = combine_min(battery_acc, acc);

    CampaignReport report;
    report.n = n;
    report.violations = acc.violations;
    report.worst_margin = acc.have_worst ? acc.worst : 0.0;
    if (acc.have_worst)
        report.worst_input.assign(acc.worst_m3.e.begin(), acc.worst_m3.e.end());
    report.seed = seed;
    report.tol = tol_rel;
    return report;
}

CampaignReport equivalence_campaign(std::uint64_t seed, std::uint64_t n, int dim,
                                    bool parallel) {
    if (dim != 2 && dim != 3) throw DomainError("dim must be 2 or 3");
    if (n < 1) throw DomainError("campaign needs n >= 1");
    constexpr double kViolation = 1e-9;
    const SampleStream stream{seed, Ensemble::gaussian(dim)};

    auto block_fn = [&](std::uint64_t begin, std::uint64_t end) {
        DevAcc acc;
        for (std::uint64_t i = begin; i < end; ++i) {
            double dev;
            Matrix2 m2;
            Matrix3 m3;
            if (dim == 2) {
                m2 = sample_matrix2(stream, i);
                const SingularPair oracle = svd_oracle2(m2);
                if (oracle.p == 0) continue;
                dev = std::fabs(k2(m2) - oracle.q / oracle.p);
            } else {
                m3 = sample_matrix3(stream, i);
                const CubicCoeffs c = char_poly3(gram_invariants(m3));
                if (c.e1 == 0) continue;
                const EigenTriple x = eig3(c);
                const EigenTriple y = eig_oracle3(m3.gram());
                dev = std::fmax(std::fabs(x.x1 - y.x1),
                                std::fmax(std::fabs(x.x2 - y.x2), std::fabs(x.x3 - y.x3))) /
                      c.e1;
            }
            if (dev > kViolation) ++acc.violations;
            if (!acc.have_worst || dev > acc.worst) {
                acc.worst = dev;
                acc.have_worst = true;
                acc.worst_m2 = m2;
                acc.worst_m3 = m3;
            }
        }
        return acc;
    };
    const DevAcc acc = block_reduce<DevAcc>(n, kBlock, block_fn, combine_max, parallel);

    CampaignReport report;
    report.n = n;
    report.violations = acc.violations;
    report.worst_margin = acc.have_worst ? acc.worst : 0.0;
    if (acc.have_worst) {
        if (dim == 2)
            report.worst_input = {acc.worst_m2.a, acc.worst_m2.b, acc.worst_m2.c,
                                  acc.worst_m2.d};
        else
            report.worst_input.assign(acc.worst_m3.e.begin(), acc.worst_m3.e.end());
    }
    report.seed = seed;
    report.tol = kViolation;
    return report;
}

}  // namespace deformlab
