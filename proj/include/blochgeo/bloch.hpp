#pragma once

// Pauli/Bloch decomposition of two-qubit states, basis-free Bloch lengths for
// arbitrary local dimension, and the mapping into the 3D model coordinates
// (||a||, ||b||, ||T_AB||).

#include <array>

#include "blochgeo/matcore.hpp"

namespace blochgeo {

/// Pauli basis, ordered (x, y, z) with the standard matrix forms.
const ComplexMatrix& pauli(int i);

/// Local Bloch vectors and correlation tensor of a two-qubit state:
/// a_i = <sigma_i x 1>, b_j = <1 x sigma_j>, t_ij = <sigma_i x sigma_j>.
struct BlochDecomposition {
    std::array<double, 3> a{};
    std::array<double, 3> b{};
    std::array<std::array<double, 3>, 3> t{};

    double a_norm() const;
    double b_norm() const;
    double t_norm() const;
};

/// Coordinates (||a||, ||b||, ||T_AB||) in the 3D model.
struct ModelPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Pauli expectation values of a two-qubit state. Coefficients are real by
/// theory; imaginary residue up to 1e-10 is discarded, larger aborts.
BlochDecomposition decompose(const DensityMatrix& rho);

/// rho = 1/4 (1 + sum a_i sigma_i x 1 + sum b_j 1 x sigma_j + sum t_ij
/// sigma_i x sigma_j). Hermitian and unit trace by construction; throws
/// not_a_state_error when the result is not PSD.
DensityMatrix reconstruct(const BlochDecomposition& d);

/// Basis-free Bloch length sqrt(d Tr rho^2 - 1) for a state of any total
/// dimension d.
double bloch_length(const DensityMatrix& rho);

/// (||a||, ||b||, ||T_AB||) of a two-qubit state.
ModelPoint model_point(const DensityMatrix& rho);

/// Local Bloch lengths of the marginals of a bipartite or tripartite state
/// with equal local dimensions, computed from marginal purities (no Bloch
/// basis is materialized for d > 2).
std::vector<double> marginal_bloch_lengths(const DensityMatrix& rho);

}  // namespace blochgeo
