#pragma once

// Shared helpers for the test suites. Oracles here are independent of the
// implementation paths they check.

#include <cmath>
#include <vector>

#include "blochgeo/bloch.hpp"
#include "blochgeo/bounds.hpp"
#include "blochgeo/ensembles.hpp"
#include "blochgeo/entanglement.hpp"
#include "blochgeo/families.hpp"
#include "blochgeo/io.hpp"
#include "blochgeo/matcore.hpp"

namespace bgtest {

using namespace blochgeo;

inline DensityMatrix basis_state(int index) {
    ComplexMatrix m(4, 4);
    m(index, index) = 1.0;
    return DensityMatrix({2, 2}, std::move(m));
}

inline DensityMatrix bell_phi_plus() {
    ComplexMatrix m(4, 4);
    m(0, 0) = 0.5;
    m(0, 3) = 0.5;
    m(3, 0) = 0.5;
    m(3, 3) = 0.5;
    return DensityMatrix({2, 2}, std::move(m));
}

inline DensityMatrix maximally_mixed(int dim, std::vector<int> dims) {
    ComplexMatrix m = ComplexMatrix::identity(dim);
    for (auto& v : m.data) v /= static_cast<double>(dim);
    return DensityMatrix(std::move(dims), std::move(m));
}

inline double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double mx = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i)
        mx = std::max(mx, std::abs(a.data[i] - b.data[i]));
    return mx;
}

/// Haar-ish random 2x2 unitary from three angles.
inline ComplexMatrix random_unitary2(Rng& rng) {
    const double theta = std::acos(std::sqrt(rng.uniform()));
    const double alpha = 2.0 * M_PI * rng.uniform();
    const double beta = 2.0 * M_PI * rng.uniform();
    const cdouble ea = std::polar(1.0, alpha);
    const cdouble eb = std::polar(1.0, beta);
    ComplexMatrix u(2, 2);
    u(0, 0) = ea * std::cos(theta);
    u(0, 1) = eb * std::sin(theta);
    u(1, 0) = -std::conj(eb) * std::sin(theta);
    u(1, 1) = std::conj(ea) * std::cos(theta);
    return u;
}

inline DensityMatrix conjugate_by(const DensityMatrix& rho, const ComplexMatrix& u) {
    return DensityMatrix(rho.dims(), u * rho.matrix() * dagger(u));
}

inline DensityMatrix random_two_qubit(uint64_t seed, long index) {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::HsMixed;
    spec.count = index + 1;
    spec.dims = {2, 2};
    spec.seed = seed;
    return sample_state(spec, index);
}

/// Membership oracle for the hull of (1,1,1), (1,0,0), (0,1,0), (0,0,1) and
/// the origin: barycentric feasibility in the two tetrahedra that tile it.
inline bool in_classical_hull(double x, double y, double z, double tol = 1e-10) {
    if (x < -tol || y < -tol || z < -tol) return false;
    // Lower tetrahedron: convex hull of the origin and the three unit axes.
    if (x + y + z <= 1.0 + tol) return true;
    // Upper tetrahedron spanned by (1,1,1) over the face (e1, e2, e3).
    const double w1 = (x + y + z - 1.0) / 2.0;
    return w1 <= 1.0 + tol && x - w1 >= -tol && y - w1 >= -tol && z - w1 >= -tol;
}

}  // namespace bgtest
