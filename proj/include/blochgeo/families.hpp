#pragma once

// Constructors for the named state families: the lower- and upper-boundary
// families of the 3D model, Werner states, the classically correlated state,
// MEMS/MEMMS, the monogamy-saturating tripartite family, the near-boundary
// entangled ansatz with diagonal marginals, and diagonal states.

#include <map>
#include <string>

#include "blochgeo/matcore.hpp"

namespace blochgeo {

/// Lower-boundary family p |0><0| x 1/2 + q 1/2 x |0><0| + (1-p-q)|00><00|;
/// requires p, q >= 0 and p + q <= 1. Saturates the lower model surface.
DensityMatrix rho_lb(double p, double q);

/// Upper-boundary family: rank-2 mixture of a Schmidt-correlated pure state
/// with the product state |ij> (i != j). The Schmidt weight is swept over the
/// exact saturating range, so every (p, q) in [0,1]^2 saturates the purity
/// bound and the upper model surface. Purity is 1 - 2p + 2p^2 and the
/// marginal length difference is 2 min(p, 1-p). (i, j) = (0, 1) makes
/// subsystem A the longer marginal.
DensityMatrix rho_ub(double p, double q, int i = 0, int j = 1);

/// Werner state p |phi+><phi+| + (1-p) 1/4 for p in [0, 1].
DensityMatrix werner(double p);

/// Classically correlated state (|00><00| + |11><11|)/2 at point (0, 0, 1).
DensityMatrix cc_state();

/// Unitary rotating the {|00>, |11>} plane by theta, identity on |01>, |10>.
ComplexMatrix entangling_unitary(double theta);

/// Maximally entangled mixed states; requires x >= 0, theta in [0, 1],
/// 2x + theta <= 1. Concurrence equals theta.
DensityMatrix mems(double x, double theta);

/// MEMS branch maximizing purity-constrained concurrence c:
/// x = 1/3 - c/2 for c <= 2/3, x = 0 above.
DensityMatrix mems_optimal(double concurrence);

/// Maximally entangled states at fixed marginal mixedness; identical to
/// rho_ub (both names resolve to the upper-boundary family).
DensityMatrix memms(double p, double q, int i = 0, int j = 1);

/// Pure three-qubit state vector sqrt((x-y)/2)|001> + sqrt((1+y)/2)|010> +
/// sqrt((1-x)/2)|100>; requires -1 <= y <= x <= 1. For 0 <= y <= x it
/// saturates the qubit monogamy inequality with lengths (x, y, 1-x+y).
std::vector<cdouble> tripartite_saturating(double x, double y);

/// The same state as a validated dims-[2,2,2] density matrix.
DensityMatrix tripartite_saturating_state(double x, double y);

/// Near-boundary entangled state with diagonal marginals (only c_ZZ, c_XX =
/// c_YY nonzero), placed exactly eps above the extended separable surface at
/// (aZ, bZ). NPT for eps > 0; eps = 0 yields the boundary (PPT) state.
/// Throws argument_error when no NPT state exists within the ansatz.
DensityMatrix appendix_extremal(double a_z, double b_z, double eps);

/// Diagonal state from a probability 4-vector.
DensityMatrix diagonal_state(const std::array<double, 4>& probs);

/// Named family resolution used by the CLI and the family-grid ensembles.
struct FamilySpec {
    std::string name;  ///< lb, ub, werner, mems, memms, cc,
                       ///< tripartite-saturating, appendix-extremal, diagonal
    std::map<std::string, double> params;
};

/// Builds the requested family member; rejects unknown names or parameters.
DensityMatrix make_family_state(const FamilySpec& spec);

/// Canonical parameter sweep of roughly `count` members for a family,
/// ordered deterministically. Parameters are reported alongside each state.
std::vector<FamilySpec> family_grid(const std::string& name, long count);

}  // namespace blochgeo
