#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace bgtest;

TEST_CASE("decomposition of landmark states") {
    // Maximally mixed state sits at the origin.
    const BlochDecomposition mm = decompose(maximally_mixed(4, {2, 2}));
    CHECK(mm.a_norm() <= 1e-13);
    CHECK(mm.b_norm() <= 1e-13);
    CHECK(mm.t_norm() <= 1e-13);

    // |00><00|: a = b = (0,0,1), t_zz = 1, everything else 0.
    const BlochDecomposition d00 = decompose(basis_state(0));
    CHECK(d00.a[2] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(d00.b[2] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(d00.t[2][2] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(d00.a[0]) + std::abs(d00.a[1]) <= 1e-13);
    CHECK(std::abs(d00.t[0][0]) + std::abs(d00.t[1][1]) <= 1e-13);

    // |phi+>: a = b = 0, t = diag(1, -1, 1).
    const BlochDecomposition dbell = decompose(bell_phi_plus());
    CHECK(dbell.a_norm() <= 1e-13);
    CHECK(dbell.b_norm() <= 1e-13);
    CHECK(dbell.t[0][0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(dbell.t[1][1] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(dbell.t[2][2] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(dbell.t[0][1]) + std::abs(dbell.t[1][2]) <= 1e-13);
}

TEST_CASE("decompose rejects wrong dimensions") {
    CHECK_THROWS_AS(decompose(maximally_mixed(8, {2, 2, 2})), argument_error);
    CHECK_THROWS_AS(decompose(maximally_mixed(9, {3, 3})), argument_error);
}

TEST_CASE("reconstruct inverts decompose and flags non-states") {
    BlochDecomposition zero;
    const DensityMatrix mm = reconstruct(zero);
    CHECK(max_entry_diff(mm.matrix(), maximally_mixed(4, {2, 2}).matrix()) <= 1e-15);

    BlochDecomposition bell;
    bell.t[0][0] = 1.0;
    bell.t[1][1] = -1.0;
    bell.t[2][2] = 1.0;
    CHECK(max_entry_diff(reconstruct(bell).matrix(), bell_phi_plus().matrix()) <= 1e-14);

    BlochDecomposition too_long;
    too_long.a[2] = 2.0;
    try {
        reconstruct(too_long);
        FAIL("expected not_a_state_error");
    } catch (const not_a_state_error& e) {
        CHECK(e.min_eigenvalue() == doctest::Approx(-0.25).epsilon(1e-10));
    }
}

TEST_CASE("round-trip reconstruct(decompose(rho)) is the identity") {
    for (long i = 0; i < 100; ++i) {
        const DensityMatrix rho = random_two_qubit(31, i);
        const DensityMatrix back = reconstruct(decompose(rho));
        CHECK(max_entry_diff(back.matrix(), rho.matrix()) <= 1e-12);
    }
}

TEST_CASE("bloch_length of landmark states") {
    CHECK(bloch_length(maximally_mixed(2, {2})) <= 1e-12);
    CHECK(bloch_length(maximally_mixed(3, {3})) <= 1e-12);
    CHECK(bloch_length(maximally_mixed(4, {2, 2})) <= 1e-12);

    // Any pure qubit state has length 1.
    ComplexMatrix plus(2, 2);
    plus(0, 0) = 0.5;
    plus(0, 1) = 0.5;
    plus(1, 0) = 0.5;
    plus(1, 1) = 0.5;
    CHECK(bloch_length(DensityMatrix({2}, plus)) == doctest::Approx(1.0).epsilon(1e-12));

    // Any pure two-qubit state has length sqrt(3).
    EnsembleSpec spec{EnsembleKind::HaarPure, 50, {2, 2}, 99};
    for (long i = 0; i < 50; ++i)
        CHECK(bloch_length(sample_state(spec, i)) ==
              doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("model points of the landmark states") {
    const ModelPoint mm = model_point(maximally_mixed(4, {2, 2}));
    CHECK(std::abs(mm.x) + std::abs(mm.y) + std::abs(mm.z) <= 1e-12);

    const ModelPoint bell = model_point(bell_phi_plus());
    CHECK(std::abs(bell.x) <= 1e-12);
    CHECK(std::abs(bell.y) <= 1e-12);
    CHECK(bell.z == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));

    const ModelPoint p00 = model_point(basis_state(0));
    CHECK(p00.x == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(p00.y == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(p00.z == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("purity identity d^2 Tr(rho^2) = 1 + x^2 + y^2 + z^2") {
    for (long i = 0; i < 200; ++i) {
        const DensityMatrix rho = random_two_qubit(37, i);
        const ModelPoint p = model_point(rho);
        const double lhs = 4.0 * rho.purity();
        const double rhs = 1.0 + p.x * p.x + p.y * p.y + p.z * p.z;
        CHECK(std::abs(lhs - rhs) <= 1e-10);
    }
}

TEST_CASE("marginal Bloch lengths") {
    const std::vector<double> bell = marginal_bloch_lengths(bell_phi_plus());
    CHECK(bell[0] <= 1e-12);
    CHECK(bell[1] <= 1e-12);

    // |000><000|
    ComplexMatrix m(8, 8);
    m(0, 0) = 1.0;
    const std::vector<double> triple = marginal_bloch_lengths(DensityMatrix({2, 2, 2}, m));
    for (double v : triple) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    // GHZ-like state: every marginal is maximally mixed.
    ComplexMatrix ghz(8, 8);
    ghz(0, 0) = 0.5;
    ghz(0, 7) = 0.5;
    ghz(7, 0) = 0.5;
    ghz(7, 7) = 0.5;
    for (double v : marginal_bloch_lengths(DensityMatrix({2, 2, 2}, ghz)))
        CHECK(v <= 1e-12);

    ComplexMatrix rect = ComplexMatrix::identity(6);
    for (auto& v : rect.data) v /= 6.0;
    CHECK_THROWS_AS(marginal_bloch_lengths(DensityMatrix({2, 3}, rect)), argument_error);
}

TEST_CASE("model point is invariant under local unitaries") {
    Rng rng(41);
    for (long i = 0; i < 50; ++i) {
        const DensityMatrix rho = random_two_qubit(43, i);
        const ModelPoint p = model_point(rho);
        const ComplexMatrix u = kron(random_unitary2(rng), random_unitary2(rng));
        const ModelPoint q = model_point(conjugate_by(rho, u));
        CHECK(std::abs(p.x - q.x) <= 1e-10);
        CHECK(std::abs(p.y - q.y) <= 1e-10);
        CHECK(std::abs(p.z - q.z) <= 1e-10);
    }
}

TEST_CASE("pure states lie on the circular arc of radius sqrt(3)") {
    EnsembleSpec spec{EnsembleKind::HaarPure, 10000, {2, 2}, 47};
    for (long i = 0; i < spec.count; ++i) {
        const ModelPoint p = model_point(sample_state(spec, i));
        CHECK(std::abs(p.x - p.y) <= 1e-10);
        const double radius = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
        CHECK(std::abs(radius - std::sqrt(3.0)) <= 1e-10);
    }
}

TEST_CASE("necessary Bloch-coefficient budget holds on random states") {
    for (long i = 0; i < 500; ++i) {
        const BlochDecomposition d = decompose(random_two_qubit(53, i));
        const double total = d.a_norm() * d.a_norm() + d.b_norm() * d.b_norm() +
                             d.t_norm() * d.t_norm();
        CHECK(total <= 3.0 + 1e-10);
    }
}

TEST_CASE("diagonal states map into the classical hull") {
    Rng rng(59);
    for (int rep = 0; rep < 300; ++rep) {
        std::array<double, 4> p{};
        double sum = 0.0;
        for (auto& v : p) {
            v = -std::log(std::max(rng.uniform(), 1e-300));
            sum += v;
        }
        for (auto& v : p) v /= sum;
        const ModelPoint mp = model_point(diagonal_state(p));
        CHECK(in_classical_hull(mp.x, mp.y, mp.z));
        // Facet cross-check of the hull oracle.
        CHECK(mp.x + mp.y - mp.z <= 1.0 + 1e-10);
        CHECK(mp.y + mp.z - mp.x <= 1.0 + 1e-10);
        CHECK(mp.z + mp.x - mp.y <= 1.0 + 1e-10);
    }

    // Tetrahedron vertices and center.
    const ModelPoint v1 = model_point(diagonal_state({1, 0, 0, 0}));
    CHECK(v1.x == doctest::Approx(1.0));
    CHECK(v1.y == doctest::Approx(1.0));
    CHECK(v1.z == doctest::Approx(1.0));
    const ModelPoint center = model_point(diagonal_state({0.25, 0.25, 0.25, 0.25}));
    CHECK(center.x + center.y + center.z <= 1e-12);
}

TEST_CASE("decomposition JSON round-trip") {
    const BlochDecomposition d = decompose(random_two_qubit(61, 3));
    const BlochDecomposition back = decomposition_from_json(decomposition_to_json(d));
    for (int i = 0; i < 3; ++i) {
        CHECK(back.a[i] == d.a[i]);
        CHECK(back.b[i] == d.b[i]);
        for (int j = 0; j < 3; ++j) CHECK(back.t[i][j] == d.t[i][j]);
    }
}
