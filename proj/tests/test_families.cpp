#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace bgtest;

TEST_CASE("rho_lb endpoints and marginals") {
    CHECK(max_entry_diff(rho_lb(0.0, 0.0).matrix(), basis_state(0).matrix()) == 0.0);

    const ModelPoint edge = model_point(rho_lb(1.0, 0.0));
    CHECK(edge.x == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(edge.y) <= 1e-13);
    CHECK(std::abs(edge.z) <= 1e-13);

    const ModelPoint mid = model_point(rho_lb(0.5, 0.5));
    CHECK(std::abs(mid.z - (mid.x + mid.y - 1.0)) <= 1e-10);

    CHECK_THROWS_AS(rho_lb(0.7, 0.7), argument_error);
    CHECK_THROWS_AS(rho_lb(-0.1, 0.2), argument_error);
}

TEST_CASE("rho_lb saturates the lower surface over its whole simplex") {
    double worst = 0.0;
    for (int a = 0; a <= 20; ++a)
        for (int b = 0; a + b <= 20; ++b) {
            const ModelPoint p = model_point(rho_lb(a / 20.0, b / 20.0));
            CHECK(p.x + p.y >= 1.0 - 1e-12);
            worst = std::max(worst, std::abs(p.z - lower_surface(p.x, p.y)));
        }
    CHECK(worst <= 1e-10);
}

TEST_CASE("rho_lb interior states have rank 3") {
    for (double p : {0.2, 0.5}) {
        for (double q : {0.2, 0.4}) {
            if (p + q >= 1.0) continue;
            const Spectrum spec = hermitian_eigenvalues(rho_lb(p, q).matrix());
            int positive = 0;
            for (double v : spec)
                if (v > 1e-10) ++positive;
            CHECK(positive == 3);
        }
    }
}

TEST_CASE("rho_ub endpoints, purity and length difference") {
    // p = 0: pure state on the arc.
    for (double q : {0.0, 0.3, 1.0}) {
        const DensityMatrix pure = rho_ub(0.0, q);
        CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-13));
        const ModelPoint p = model_point(pure);
        CHECK(std::abs(p.x - p.y) <= 1e-12);
    }

    // p = q = 1/2: purity 1/2 and maximal length difference.
    const DensityMatrix half = rho_ub(0.5, 0.5);
    CHECK(half.purity() == doctest::Approx(0.5).epsilon(1e-14));
    const std::vector<double> len = marginal_bloch_lengths(half);
    CHECK(std::abs(len[0] - len[1]) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(rho_ub(0.5, 0.5, 1, 1), argument_error);
    CHECK_THROWS_AS(rho_ub(1.5, 0.5), argument_error);
}

TEST_CASE("rho_ub saturates the purity bound and the upper surface on a grid") {
    double worst_theorem = 0.0, worst_surface = 0.0, worst_purity = 0.0;
    for (int a = 0; a <= 20; ++a)
        for (int b = 0; b <= 20; ++b) {
            const double p = a / 20.0, q = b / 20.0;
            const DensityMatrix rho = rho_ub(p, q);
            const BoundReport rep = check_theorem1(rho);
            worst_theorem = std::max(worst_theorem, std::abs(rep.slack));
            const ModelPoint mp = model_point(rho);
            worst_surface =
                std::max(worst_surface, std::abs(mp.z - upper_surface(mp.x, mp.y)));
            worst_purity =
                std::max(worst_purity, std::abs(rho.purity() - (1.0 - 2.0 * p + 2.0 * p * p)));
        }
    CHECK(worst_theorem <= 1e-9);
    CHECK(worst_surface <= 1e-9);
    CHECK(worst_purity <= 1e-12);
}

TEST_CASE("rho_ub length difference equals 2p on the saturating branch") {
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= 10; ++b) {
            const double p = a / 20.0;  // p in [0, 1/2]
            const double q = b / 10.0;
            const std::vector<double> len = marginal_bloch_lengths(rho_ub(p, q));
            CHECK(std::abs(std::abs(len[0] - len[1]) - 2.0 * p) <= 1e-10);
        }
}

TEST_CASE("rho_ub index convention: (i,j) picks the longer marginal") {
    const std::vector<double> a_long = marginal_bloch_lengths(rho_ub(0.2, 0.4, 0, 1));
    CHECK(a_long[0] > a_long[1]);
    const std::vector<double> b_long = marginal_bloch_lengths(rho_ub(0.2, 0.4, 1, 0));
    CHECK(b_long[1] > b_long[0]);
    // Same coordinates, mirrored.
    CHECK(a_long[0] == doctest::Approx(b_long[1]).epsilon(1e-12));
    CHECK(a_long[1] == doctest::Approx(b_long[0]).epsilon(1e-12));
}

TEST_CASE("rho_ub states have rank 2 strictly inside the parameter range") {
    for (double p : {0.1, 0.3, 0.5, 0.7}) {
        const Spectrum spec = hermitian_eigenvalues(rho_ub(p, 0.6).matrix());
        int positive = 0;
        for (double v : spec)
            if (v > 1e-10) ++positive;
        CHECK(positive == 2);
    }
}

TEST_CASE("memms is the upper-boundary family under another name") {
    CHECK(max_entry_diff(memms(0.3, 0.7).matrix(), rho_ub(0.3, 0.7).matrix()) == 0.0);
    CHECK(memms(0.5, 0.5).purity() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("werner states: point, threshold, concurrence") {
    const ModelPoint apex = model_point(werner(1.0));
    CHECK(std::abs(apex.x) <= 1e-12);
    CHECK(apex.z == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));

    for (double p : {0.0, 0.25, 0.7})
        CHECK(model_point(werner(p)).z ==
              doctest::Approx(std::sqrt(3.0) * p).epsilon(1e-10));

    CHECK(std::abs(concurrence(werner(1.0 / 3.0))) <= 1e-9);
    CHECK(std::abs(ppt_min_eigenvalue(werner(1.0 / 3.0))) <= 1e-10);

    // Concurrence at p = 1/2, cross-checked against the PPT sign.
    CHECK(concurrence(werner(0.5)) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(ppt_min_eigenvalue(werner(0.5)) < -1e-10);

    CHECK_THROWS_AS(werner(1.2), argument_error);
    CHECK_THROWS_AS(werner(-0.2), argument_error);
}

TEST_CASE("classically correlated state") {
    const DensityMatrix cc = cc_state();
    const ModelPoint p = model_point(cc);
    CHECK(std::abs(p.x) <= 1e-12);
    CHECK(std::abs(p.y) <= 1e-12);
    CHECK(p.z == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(concurrence(cc) == 0.0);
    CHECK(ppt_min_eigenvalue(cc) >= -1e-12);
    CHECK(max_entry_diff(partial_transpose(cc, 1), cc.matrix()) == 0.0);
}

TEST_CASE("entangling unitary basics") {
    CHECK(max_entry_diff(entangling_unitary(0.0), ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix u = entangling_unitary(M_PI / 2.0);
    CHECK(std::abs(u(3, 0) - cdouble(1.0, 0.0)) <= 1e-15);  // |00> -> |11>
    CHECK(std::abs(u(0, 3) - cdouble(-1.0, 0.0)) <= 1e-15);

    Rng rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix v = entangling_unitary(10.0 * (rng.uniform() - 0.5));
        CHECK(max_entry_diff(v * dagger(v), ComplexMatrix::identity(4)) <= 1e-12);
    }
}

TEST_CASE("rotated lower-edge states stay in the model; saturation locus recorded") {
    // The rotation sweeps the boundary on two windows of the Schmidt weight
    // s = cos^2(theta): s >= 1/(2-p) (marginals aligned with +z) and
    // s <= 1 - 1/(2-p) (aligned with -z). Strictly between those windows the
    // rotated state moves inside the model. Both behaviours are pinned here.
    for (int a = 0; a <= 10; ++a) {
        const double p = a / 10.0;
        const double lam = 1.0 - p / 2.0;
        const DensityMatrix base = rho_lb(p, 0.0);
        for (int b = 0; b <= 12; ++b) {
            const double theta = b * M_PI / 24.0;
            const ComplexMatrix u = entangling_unitary(theta);
            const DensityMatrix rotated({2, 2}, u * base.matrix() * dagger(u));
            const ModelPoint mp = model_point(rotated);
            CHECK(in_model(mp));

            const double s = std::cos(theta) * std::cos(theta);
            const double residual = std::abs(mp.z - upper_surface(mp.x, mp.y));
            const double s_hi = 1.0 / (2.0 * lam);
            if (s >= s_hi + 1e-9 || s <= 1.0 - s_hi - 1e-9) CHECK(residual <= 1e-9);
        }
        // Midpoint of the interior band (s = 1/2, theta = pi/4): off the
        // boundary whenever the band is wide enough to resolve.
        if (p >= 0.2) {
            const ComplexMatrix u = entangling_unitary(M_PI / 4.0);
            const DensityMatrix rotated({2, 2}, u * base.matrix() * dagger(u));
            const ModelPoint mp = model_point(rotated);
            CHECK(std::abs(mp.z - upper_surface(mp.x, mp.y)) > 1e-6);
        }
    }
}

TEST_CASE("MEMS coordinates, concurrence and validity") {
    // Branch x = 1/3 - theta/2.
    {
        const double theta = 0.4;
        const ModelPoint p = model_point(mems(1.0 / 3.0 - theta / 2.0, theta));
        CHECK(p.x == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(p.y == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(p.z ==
              doctest::Approx(std::sqrt(2.0 * theta * theta + 1.0 / 9.0)).epsilon(1e-12));
    }
    // Branch x = 0.
    {
        const double theta = 0.8;
        const ModelPoint p = model_point(mems(0.0, theta));
        CHECK(p.x == doctest::Approx(1.0 - theta).epsilon(1e-12));
        CHECK(p.y == doctest::Approx(1.0 - theta).epsilon(1e-12));
        CHECK(p.z == doctest::Approx(std::sqrt(1.0 - 4.0 * theta + 6.0 * theta * theta))
                         .epsilon(1e-12));
    }

    CHECK(max_entry_diff(mems(0.0, 1.0).matrix(), bell_phi_plus().matrix()) <= 1e-15);

    for (int k = 0; k <= 20; ++k) {
        const double theta = k / 20.0;
        const double x_max = (1.0 - theta) / 2.0;
        for (double frac : {0.0, 0.5, 1.0}) {
            const double x = frac * x_max;
            CHECK(concurrence(mems(x, theta)) == doctest::Approx(theta).epsilon(1e-9));
        }
    }

    CHECK_THROWS_AS(mems(0.4, 0.4), argument_error);
    CHECK_THROWS_AS(mems(-0.1, 0.2), argument_error);
    CHECK_THROWS_AS(mems(0.0, 1.2), argument_error);
}

TEST_CASE("special MEMS members sit on the region boundaries") {
    // mems(1/3, 0): the family's only unentangled member, on the sphere of
    // the separable ball.
    const ModelPoint lo = model_point(mems(1.0 / 3.0, 0.0));
    CHECK(std::abs(lo.x * lo.x + lo.y * lo.y + lo.z * lo.z - 1.0 / 3.0) <= 1e-12);
    CHECK(concurrence(mems(1.0 / 3.0, 0.0)) == 0.0);

    // mems(0, 2/3): joins the two branches exactly on the entangled-region
    // boundary z^2 = 1 - |x^2 - y^2|.
    const ModelPoint hi = model_point(mems(0.0, 2.0 / 3.0));
    CHECK(std::abs(hi.z * hi.z - (1.0 - std::abs(hi.x * hi.x - hi.y * hi.y))) <= 1e-12);
    CHECK(ppt_min_eigenvalue(mems(0.0, 2.0 / 3.0)) < -1e-10);
}

TEST_CASE("optimal MEMS branch switches at concurrence 2/3") {
    const DensityMatrix low = mems_optimal(0.5);
    CHECK(model_point(low).x == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    const DensityMatrix high = mems_optimal(0.9);
    CHECK(model_point(high).x == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(concurrence(mems_optimal(2.0 / 3.0)) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("MEMS frontier agrees with the constructor route") {
    // The frontier goes like sqrt(purity - 1/3) at its foot, so purity
    // roundoff of ~1e-16 is amplified to ~1e-8 there.
    for (int k = 0; k <= 100; ++k) {
        const double c = k / 100.0;
        const DensityMatrix rho = mems_optimal(c);
        CHECK(std::abs(mems_max_concurrence(rho.purity()) - c) <= 5e-8);
    }
}

TEST_CASE("MEMMS dominance: random states never beat the boundary family") {
    EnsembleSpec spec{EnsembleKind::HsMixed, 10000, {2, 2}, 103};
    for (long i = 0; i < spec.count; ++i) {
        const DensityMatrix rho = sample_state(spec, i);
        const ModelPoint mp = model_point(rho);
        const double w = std::abs(mp.x - mp.y) / 2.0;
        const double longer = std::max(mp.x, mp.y), shorter = std::min(mp.x, mp.y);
        const double q = (1.0 - 2.0 * w) > 1e-12 ? shorter / (1.0 - 2.0 * w) : 0.0;
        const DensityMatrix boundary =
            (mp.x >= mp.y) ? rho_ub(w, q, 0, 1) : rho_ub(w, q, 1, 0);
        const ModelPoint bp = model_point(boundary);
        REQUIRE(std::abs(bp.x - mp.x) <= 1e-9);
        REQUIRE(std::abs(bp.y - mp.y) <= 1e-9);
        CHECK(concurrence(rho) <= concurrence(boundary) + 1e-6);
        (void)longer;
    }
}

TEST_CASE("tripartite saturating family") {
    const std::vector<cdouble> psi = tripartite_saturating(1.0, 0.0);
    double norm = 0.0;
    for (const auto& c : psi) norm += std::norm(c);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));

    const std::vector<double> len = marginal_bloch_lengths(tripartite_saturating_state(1.0, 0.0));
    CHECK(len[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(len[1]) <= 1e-12);
    CHECK(std::abs(len[2]) <= 1e-12);
    CHECK(std::abs(qubit_monogamy_slack(len[0], len[1], len[2])) <= 1e-9);

    // x = y: the |001> amplitude vanishes.
    CHECK(std::abs(tripartite_saturating(0.5, 0.5)[1]) == 0.0);

    CHECK_THROWS_AS(tripartite_saturating(0.2, 0.5), argument_error);
    CHECK_THROWS_AS(tripartite_saturating(1.2, 0.0), argument_error);
}

TEST_CASE("tripartite family saturates monogamy on the 20x20 grid") {
    double worst = 0.0;
    for (int a = 0; a < 20; ++a)
        for (int b = 0; b < 20; ++b) {
            const double x = a / 19.0;
            const double y = (b / 19.0) * x;  // 0 <= y <= x
            const std::vector<double> len =
                marginal_bloch_lengths(tripartite_saturating_state(x, y));
            worst = std::max(worst,
                             std::abs(qubit_monogamy_slack(len[0], len[1], len[2])));
        }
    CHECK(worst <= 1e-9);
}

TEST_CASE("appendix extremal states sit just above the separable surface") {
    // Case a_z + b_z > 2/3.
    {
        const DensityMatrix rho = appendix_extremal(0.5, 0.5, 1e-3);
        CHECK(ppt_min_eigenvalue(rho) < -1e-10);
        const ModelPoint p = model_point(rho);
        const double surface = 1.0 - p.x - p.y;  // middle case of the bound
        CHECK(p.z > surface);
        CHECK(p.z - surface <= 1e-3 + 1e-12);
    }
    // Case a_z + b_z <= 2/3 at the origin: tightness of the 1/sqrt(3) ball.
    {
        const DensityMatrix rho = appendix_extremal(0.0, 0.0, 1e-3);
        CHECK(ppt_min_eigenvalue(rho) < -1e-10);
        const ModelPoint p = model_point(rho);
        CHECK(std::abs(p.x) <= 1e-12);
        CHECK(p.z > 1.0 / std::sqrt(3.0));
        CHECK(p.z - 1.0 / std::sqrt(3.0) <= 1e-3 + 1e-12);
    }
    // eps = 0 is the boundary case.
    {
        const DensityMatrix rho = appendix_extremal(0.3, 0.2, 0.0);
        CHECK(std::abs(ppt_min_eigenvalue(rho)) <= 1e-9);
    }
    // Infeasible corner reports instead of returning silently.
    CHECK_THROWS_AS(appendix_extremal(1.0, 0.9, 1e-3), argument_error);
    CHECK_THROWS_AS(appendix_extremal(0.5, 0.5, 0.2), argument_error);
}

TEST_CASE("diagonal states") {
    const ModelPoint vertex = model_point(diagonal_state({1, 0, 0, 0}));
    CHECK(vertex.x == doctest::Approx(1.0));
    CHECK(vertex.y == doctest::Approx(1.0));
    CHECK(vertex.z == doctest::Approx(1.0));

    const ModelPoint origin = model_point(diagonal_state({0.25, 0.25, 0.25, 0.25}));
    CHECK(origin.x + origin.y + origin.z <= 1e-13);

    CHECK(max_entry_diff(diagonal_state({0.5, 0.0, 0.0, 0.5}).matrix(),
                         cc_state().matrix()) == 0.0);

    CHECK_THROWS_AS(diagonal_state({0.5, 0.5, 0.5, -0.5}), argument_error);
    CHECK_THROWS_AS(diagonal_state({0.5, 0.2, 0.2, 0.2}), argument_error);
}

TEST_CASE("family resolution by name") {
    const DensityMatrix w = make_family_state({"werner", {{"p", 0.5}}});
    CHECK(max_entry_diff(w.matrix(), werner(0.5).matrix()) == 0.0);

    CHECK_THROWS_AS(make_family_state({"nope", {}}), argument_error);
    CHECK_THROWS_AS(make_family_state({"werner", {{"p", 0.5}, {"bogus", 1.0}}}),
                    argument_error);
    CHECK_THROWS_AS(make_family_state({"werner", {}}), argument_error);

    const DensityMatrix opt = make_family_state({"mems", {{"c", 0.8}}});
    CHECK(max_entry_diff(opt.matrix(), mems_optimal(0.8).matrix()) == 0.0);
}

TEST_CASE("every family constructor output passes state validation") {
    // Constructors return DensityMatrix, which validates on construction;
    // touch each family once so a regression cannot hide.
    CHECK(rho_lb(0.25, 0.5).purity() > 0.0);
    CHECK(rho_ub(0.35, 0.8).purity() > 0.0);
    CHECK(werner(0.77).purity() > 0.0);
    CHECK(cc_state().purity() > 0.0);
    CHECK(mems(0.1, 0.5).purity() > 0.0);
    CHECK(memms(0.2, 0.2).purity() > 0.0);
    CHECK(tripartite_saturating_state(0.7, 0.2).purity() > 0.0);
    CHECK(appendix_extremal(0.2, 0.3, 1e-3).purity() > 0.0);
    CHECK(diagonal_state({0.1, 0.2, 0.3, 0.4}).purity() > 0.0);
}
