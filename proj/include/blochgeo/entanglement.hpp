#pragma once

// Exact two-qubit entanglement ground truth (Wootters concurrence, PPT) and
// the linear-entropy-based entanglement witness used by the region analysis.

#include "blochgeo/matcore.hpp"

namespace blochgeo {

/// Combined entanglement diagnostics of one two-qubit state. `boundary`
/// flags the dead zone where PPT and concurrence cannot resolve a side.
struct EntanglementReport {
    double concurrence;
    double pt_min_eigenvalue;
    bool entangled;  ///< pt_min_eigenvalue < -1e-10
    bool boundary;   ///< pt_min_eigenvalue in [-1e-10, 1e-9]
    double linear_entropy_global;
    std::array<double, 2> linear_entropy_marginals;
};

/// Wootters concurrence C = max(0, l1 - l2 - l3 - l4), where l_k are the
/// descending square roots of the spectrum of rho (sy x sy) rho* (sy x sy).
/// All spectral work stays Hermitian via sqrt(rho) R sqrt(rho).
double concurrence(const DensityMatrix& rho);

/// Minimum eigenvalue of the partial transpose; negative beyond -1e-10 iff
/// the state is entangled (exact for two qubits).
double ppt_min_eigenvalue(const DensityMatrix& rho);

/// S_L(rho) = 1 - Tr rho^2.
double linear_entropy(const DensityMatrix& rho);

/// Bloch-form marginal-entropy witness ||T||^2 > 1 - | ||a||^2 - ||b||^2 |
/// (strict beyond 1e-10). True implies entanglement; false is inconclusive.
bool entropy_entanglement_witness(const DensityMatrix& rho);

EntanglementReport entanglement_report(const DensityMatrix& rho);

}  // namespace blochgeo
