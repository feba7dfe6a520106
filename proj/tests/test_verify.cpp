#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "deformlab/errors.hpp"
#include "deformlab/verify.hpp"

using namespace deformlab;

TEST_CASE("svd_oracle2 examples") {
    SingularPair s = svd_oracle2(Matrix2::identity());
    CHECK(s.p == doctest::Approx(1).epsilon(1e-15));
    CHECK(s.q == doctest::Approx(1).epsilon(1e-15));

    s = svd_oracle2({1, 1, 0, 1});
    const double golden = (1 + std::sqrt(5.0)) / 2;
    CHECK(s.p == doctest::Approx(golden).epsilon(1e-12));
    CHECK(s.q == doctest::Approx(1 / golden).epsilon(1e-12));

    s = svd_oracle2({0, 0, 0, 0});
    CHECK(s.p == 0);
    CHECK(s.q == 0);
}

TEST_CASE("eig_oracle3 examples") {
    EigenTriple x = eig_oracle3(Matrix3::identity());
    CHECK(x.x1 == doctest::Approx(1).epsilon(1e-15));
    CHECK(x.x3 == doctest::Approx(1).epsilon(1e-15));

    x = eig_oracle3(Matrix3::diagonal(1, 2, 3).gram());
    CHECK(x.x1 == doctest::Approx(1).epsilon(1e-13));
    CHECK(x.x2 == doctest::Approx(4).epsilon(1e-13));
    CHECK(x.x3 == doctest::Approx(9).epsilon(1e-13));

    // Gram of the triangular-ones matrix; roots of x^3 - 6x^2 + 5x - 1.
    x = eig_oracle3(Matrix3{{1, 1, 1, 1, 2, 2, 1, 2, 3}});
    CHECK(x.x1 == doctest::Approx(0.3079785283699041).epsilon(1e-10));
    CHECK(x.x2 == doctest::Approx(0.6431041321077906).epsilon(1e-10));
    CHECK(x.x3 == doctest::Approx(5.0489173395223053).epsilon(1e-10));
}

TEST_CASE("interlacing campaign") {
    const CampaignReport r = interlacing_campaign(7, 20'000);
    CHECK(r.n == 20'000);
    CHECK(r.violations == 0);
    CHECK(r.worst_margin >= -r.tol);
    CHECK(r.seed == 7);

    // Determinism: bit-identical report on rerun and under the serial path.
    const CampaignReport r2 = interlacing_campaign(7, 20'000);
    CHECK(r.violations == r2.violations);
    CHECK(r.worst_margin == r2.worst_margin);
    CHECK(r.worst_input == r2.worst_input);
    const CampaignReport r3 = interlacing_campaign(7, 20'000, 1e-9, false);
    CHECK(r.worst_margin == r3.worst_margin);
    CHECK(r.worst_input == r3.worst_input);
}

TEST_CASE("scalar matrices sit exactly on the interlacing boundary") {
    const auto v = interlace_check(5 * Matrix3::identity());
    CHECK(v.holds);
    CHECK(std::fabs(v.margin) < 1e-13 * 75);
}

TEST_CASE("adversarial battery holds") {
    for (const Matrix3& m : adversarial_battery3()) CHECK(interlace_check(m).holds);
}

TEST_CASE("equivalence campaigns") {
    const CampaignReport d2 = equivalence_campaign(3, 10'000, 2);
    CHECK(d2.violations == 0);
    CHECK(d2.worst_margin < 1e-10);

    const CampaignReport d3 = equivalence_campaign(3, 10'000, 3);
    CHECK(d3.violations == 0);
    CHECK(d3.worst_margin < 1e-9);

    CHECK_THROWS_AS(equivalence_campaign(3, 0, 2), DomainError);
    CHECK_THROWS_AS(equivalence_campaign(3, 10, 4), DomainError);

    const CampaignReport d2s = equivalence_campaign(3, 10'000, 2, false);
    CHECK(d2.worst_margin == d2s.worst_margin);
}
