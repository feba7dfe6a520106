#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "deformlab/core3d.hpp"
#include "deformlab/errors.hpp"
#include "deformlab/rng.hpp"
#include "deformlab/sampling.hpp"
#include "deformlab/verify.hpp"

using namespace deformlab;

namespace {

// Columns (1,0,0), (1,1,0), (1,1,1): norms (1, sqrt2, sqrt3), areas
// {1, sqrt2, sqrt2}, volume 1, cubic x^3 - 6x^2 + 5x - 1.
const Matrix3 kTriangularOnes{{1, 1, 1, 0, 1, 1, 0, 0, 1}};

Matrix3 rotation_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return Matrix3{{c, -s, 0, s, c, 0, 0, 0, 1}};
}

Matrix3 rotation_x(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return Matrix3{{1, 0, 0, 0, c, -s, 0, s, c}};
}

const SampleStream gauss3{54321, Ensemble::gaussian(3)};

// Frozen from Newton refinement of x^3 - 6x^2 + 5x - 1 (see test below).
constexpr double kRoot1 = 0.3079785283699041;
constexpr double kRoot2 = 0.6431041321077906;
constexpr double kRoot3 = 5.0489173395223053;

}  // namespace

TEST_CASE("frozen roots verified in-test by Newton refinement") {
    // Independent oracle: bisect-then-Newton on s(x) = x^3 - 6x^2 + 5x - 1.
    auto s = [](double x) { return ((x - 6) * x + 5) * x - 1; };
    auto ds = [](double x) { return (3 * x - 12) * x + 5; };
    for (double frozen : {kRoot1, kRoot2, kRoot3}) {
        double x = frozen + 1e-3;  // start away from the frozen value
        for (int it = 0; it < 60; ++it) x -= s(x) / ds(x);
        CHECK(std::fabs(x - frozen) < 1e-12 * std::fmax(1.0, frozen));
    }
}

TEST_CASE("gram_invariants examples") {
    GramInvariants g = gram_invariants(Matrix3::identity());
    CHECK(g.u == doctest::Approx(1).epsilon(1e-15));
    CHECK(g.v == doctest::Approx(1).epsilon(1e-15));
    CHECK(g.w == doctest::Approx(1).epsilon(1e-15));
    CHECK(g.s1 == doctest::Approx(1).epsilon(1e-15));
    CHECK(g.vol == doctest::Approx(1).epsilon(1e-15));

    g = gram_invariants(Matrix3::diagonal(1, 2, 3));
    CHECK(g.u == doctest::Approx(1).epsilon(1e-15));
    CHECK(g.v == doctest::Approx(2).epsilon(1e-15));
    CHECK(g.w == doctest::Approx(3).epsilon(1e-15));
    // Areas {2, 3, 6} in some order; compare the squared sum.
    CHECK(g.s1 * g.s1 + g.s2 * g.s2 + g.s3 * g.s3 == doctest::Approx(49).epsilon(1e-14));
    CHECK(g.vol == doctest::Approx(6).epsilon(1e-14));

    g = gram_invariants(kTriangularOnes);
    CHECK(g.u == doctest::Approx(1).epsilon(1e-14));
    CHECK(g.v == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(g.w == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(g.s1 * g.s1 + g.s2 * g.s2 + g.s3 * g.s3 == doctest::Approx(5).epsilon(1e-14));
    CHECK(g.vol == doctest::Approx(1).epsilon(1e-14));
}

TEST_CASE("char_poly3 examples") {
    CubicCoeffs c = char_poly3(gram_invariants(Matrix3::identity()));
    CHECK(c.e1 == doctest::Approx(3).epsilon(1e-15));
    CHECK(c.e2 == doctest::Approx(3).epsilon(1e-15));
    CHECK(c.e3 == doctest::Approx(1).epsilon(1e-15));

    c = char_poly3(gram_invariants(Matrix3::diagonal(1, 2, 3)));
    CHECK(c.e1 == doctest::Approx(14).epsilon(1e-15));
    CHECK(c.e2 == doctest::Approx(49).epsilon(1e-14));
    CHECK(c.e3 == doctest::Approx(36).epsilon(1e-14));

    c = char_poly3(gram_invariants(kTriangularOnes));
    CHECK(c.e1 == doctest::Approx(6).epsilon(1e-14));
    CHECK(c.e2 == doctest::Approx(5).epsilon(1e-14));
    CHECK(c.e3 == doctest::Approx(1).epsilon(1e-14));
}

TEST_CASE("eig3 examples") {
    EigenTriple x = eig3({3, 3, 1});
    CHECK(x.x1 == doctest::Approx(1).epsilon(1e-12));
    CHECK(x.x2 == doctest::Approx(1).epsilon(1e-12));
    CHECK(x.x3 == doctest::Approx(1).epsilon(1e-12));

    x = eig3({14, 49, 36});
    CHECK(x.x1 == doctest::Approx(1).epsilon(1e-12));
    CHECK(x.x2 == doctest::Approx(4).epsilon(1e-12));
    CHECK(x.x3 == doctest::Approx(9).epsilon(1e-12));

    x = eig3({6, 5, 1});
    CHECK(std::fabs(x.x1 - kRoot1) < 1e-12);
    CHECK(std::fabs(x.x2 - kRoot2) < 1e-12);
    CHECK(std::fabs(x.x3 - kRoot3) < 1e-11);

    // Jacobi eigen-oracle on the Gram matrix of the triangular-ones example.
    const EigenTriple y = eig_oracle3(Matrix3{{1, 1, 1, 1, 2, 2, 1, 2, 3}});
    CHECK(std::fabs(x.x1 - y.x1) < 1e-12);
    CHECK(std::fabs(x.x2 - y.x2) < 1e-12);
    CHECK(std::fabs(x.x3 - y.x3) < 1e-11);

    CHECK_THROWS_AS(eig3({0, 1, 5}), ComplexRootsError);
}

TEST_CASE("k3 examples") {
    CHECK(k3(Matrix3::identity()) == doctest::Approx(1).epsilon(1e-14));
    CHECK(k3(Matrix3::diagonal(1, 2, 3)) == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(k3(kTriangularOnes) ==
          doctest::Approx(std::sqrt(kRoot1 / kRoot3)).epsilon(1e-12));
    CHECK(k3(kTriangularOnes) == doctest::Approx(0.24697960371746713).epsilon(1e-10));
    CHECK(k3_squared(kTriangularOnes) == doctest::Approx(kRoot1 / kRoot3).epsilon(1e-12));
    CHECK_THROWS_AS(k3(Matrix3{}), ZeroMatrixError);
}

TEST_CASE("column_bound3 examples") {
    CHECK(column_bound3(Matrix3::identity()) == doctest::Approx(1).epsilon(1e-15));
    CHECK(column_bound3(Matrix3::diagonal(1, 2, 3)) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(column_bound3(kTriangularOnes) ==
          doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(column_bound3(kTriangularOnes) >= k3(kTriangularOnes));
    CHECK_THROWS_AS(column_bound3(Matrix3::diagonal(1, 0, 1)), ZeroColumnError);
}

TEST_CASE("interlace_check examples") {
    CHECK(interlace_check(Matrix3::identity()).holds);
    CHECK(interlace_check(Matrix3::identity()).margin == doctest::Approx(0).epsilon(1e-12));

    // diag(1,2,3): equality at both ends (1 <= 1, 9 <= 9).
    const auto v = interlace_check(Matrix3::diagonal(1, 2, 3));
    CHECK(v.holds);
    CHECK(std::fabs(v.margin) < 1e-10);

    const auto t = interlace_check(kTriangularOnes);
    CHECK(t.holds);
    CHECK(t.margin == doctest::Approx(std::fmin(1 - kRoot1, kRoot3 - 3)).epsilon(1e-10));
}

TEST_CASE("Vieta identities over random matrices") {
    for (std::uint64_t i = 0; i < 100'000; ++i) {
        const Matrix3 m = sample_matrix3(gauss3, i);
        const CubicCoeffs c = char_poly3(gram_invariants(m));
        const EigenTriple x = eig3(c);
        CHECK(std::fabs(x.x1 + x.x2 + x.x3 - c.e1) <= 1e-9 * c.e1);
        CHECK(std::fabs(x.x1 * x.x2 + x.x1 * x.x3 + x.x2 * x.x3 - c.e2) <=
              1e-9 * std::fmax(c.e2, c.e1 * c.e1));
        CHECK(std::fabs(x.x1 * x.x2 * x.x3 - c.e3) <=
              1e-9 * std::fmax(c.e3, c.e1 * c.e1 * c.e1));
    }
}

TEST_CASE("eig3 agrees with the Jacobi oracle") {
    double worst = 0;
    for (std::uint64_t i = 0; i < 100'000; ++i) {
        const Matrix3 m = sample_matrix3(gauss3, i);
        const CubicCoeffs c = char_poly3(gram_invariants(m));
        const EigenTriple x = eig3(c);
        const EigenTriple y = eig_oracle3(m.gram());
        const double dev =
            std::fmax(std::fabs(x.x1 - y.x1),
                      std::fmax(std::fabs(x.x2 - y.x2), std::fabs(x.x3 - y.x3))) /
            c.e1;
        worst = std::fmax(worst, dev);
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("k3 invariances") {
    const CounterRng rng(99);
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const Matrix3 m = sample_matrix3(gauss3, i);
        const double k = k3(m);
        const Matrix3 q = rotation_z(2 * std::numbers::pi * rng.uniform(2 * i)) *
                          rotation_x(2 * std::numbers::pi * rng.uniform(2 * i + 1));
        CHECK(k3(q * m) == doctest::Approx(k).epsilon(1e-11));
        CHECK(k3(m * q) == doctest::Approx(k).epsilon(1e-11));
        for (double c : {-1e-6, 1.0, 1e6})
            CHECK(k3(c * m) == doctest::Approx(k).epsilon(1e-12));
        CHECK(k3(m.transposed()) == doctest::Approx(k).epsilon(1e-11));
    }
}

TEST_CASE("column bound dominates k3") {
    for (std::uint64_t i = 0; i < 100'000; ++i) {
        const Matrix3 m = sample_matrix3(gauss3, i);
        CHECK(k3(m) <= column_bound3(m) + 1e-12);
    }
}

TEST_CASE("interlacing holds on a seeded campaign") {
    for (std::uint64_t i = 0; i < 50'000; ++i) {
        const Matrix3 m = sample_matrix3(gauss3, i);
        CHECK(interlace_check(m).holds);
    }
}

TEST_CASE("degenerate families") {
    // Scalar matrices: all roots tie.
    for (double s : {1.0, 5.0, 1e-8, 1e8}) {
        const Matrix3 m = s * Matrix3::identity();
        CHECK(interlace_check(m).holds);
        CHECK(k3(m) == doctest::Approx(1).epsilon(1e-12));
    }
    // Rank-2: x1 = 0 <= u^2.
    const Matrix3 rank2{{1, 2, 3, 4, 5, 9, 7, 8, 15}};
    CHECK(interlace_check(rank2).holds);
    CHECK(k3(rank2) == doctest::Approx(0).epsilon(1e-9));
    // Permutation matrices.
    const Matrix3 perm{{0, 1, 0, 0, 0, 1, 1, 0, 0}};
    CHECK(interlace_check(perm).holds);
    CHECK(k3(perm) == doctest::Approx(1).epsilon(1e-12));
    // Ill-conditioned diag(1, 1, eps).
    for (double eps : {1e-8, 1e-150}) {
        CHECK(interlace_check(Matrix3::diagonal(1, 1, eps)).holds);
        const double k = k3(Matrix3::diagonal(1, 1, eps));
        CHECK(std::fabs(k - eps) <= 1e-9 * eps);
    }
    // eps^2 underflows at 1e-300; k3 collapses to 0, interlacing still holds.
    CHECK(interlace_check(Matrix3::diagonal(1, 1, 1e-300)).holds);
    CHECK(k3(Matrix3::diagonal(1, 1, 1e-300)) <= 1e-300);
}
