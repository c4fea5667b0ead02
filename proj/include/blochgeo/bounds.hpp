#pragma once

// Purity and correlation inequalities: the Bloch-length-difference purity
// bound, its tripartite and qubit-monogamy consequences, the two bounding
// surfaces of the 3D model, region classifiers and the CHSH indicator.

#include <string>

#include "blochgeo/bloch.hpp"
#include "blochgeo/matcore.hpp"

namespace blochgeo {

/// Saturation tolerance shared by all bound reports.
constexpr double kSaturationTol = 1e-9;

enum class Region {
    PurelyEntangled,
    PurelySeparableBall,
    PurelySeparableExtended,
    MixedRegion,
    OutsideModel,
};

std::string region_name(Region r);

/// Classification of a model point. margin > 0 means strictly inside the
/// named region; for OutsideModel it is the amount by which the point
/// violates the model inequalities.
struct RegionVerdict {
    Region kind;
    double margin;
};

/// Result of checking one inequality on one state.
struct BoundReport {
    double bound_value;
    double actual_value;
    double slack;  ///< bound - actual; >= -1e-9 for any valid state
    bool saturated;
};

/// Maximal Tr rho^2 of a bipartite state with equal local dimension d whose
/// marginal Bloch lengths differ by delta: (d - sqrt(2d) delta + delta^2)/d.
double purity_bound(double delta, int d);

/// Evaluates the purity bound on a concrete bipartite state.
BoundReport check_theorem1(const DensityMatrix& rho);

/// Best purity bound obtainable from the triangle inequality of the linear
/// entropy at fixed marginal length difference: (d - delta^2)/d. Dominates
/// purity_bound strictly on the open interval.
double triangle_comparison_bound(double delta, int d);

/// Maximal ||c||^2 for a pure tripartite state of equal local dimension d
/// with marginal lengths a_len, b_len; clamped below at zero.
double tripartite_bound(double a_len, double b_len, int d);

/// 1 + b - a - c; nonnegative (within 1e-9) for the marginal lengths of any
/// pure three-qubit state, for every choice of the middle system.
double qubit_monogamy_slack(double a_len, double b_len, double c_len);

/// Lower model surface: max(0, x + y - 1).
double lower_surface(double x, double y);

/// Upper model surface: sqrt(max(0, 3 + x^2 + y^2 - 4xy - 4|x - y|)).
/// A radicand below -1e-10 means no correlation length is admissible there.
double upper_surface(double x, double y);
bool upper_surface_domain_empty(double x, double y);

/// True iff the point satisfies both surface inequalities within 1e-10.
bool in_model(const ModelPoint& p);

/// Region classification with the most specific verdict and its margin.
RegionVerdict classify_point(const ModelPoint& p);

/// Necessary condition for violating a CHSH Bell inequality: ||T_AB|| > 1.
bool chsh_violation_possible(const ModelPoint& p);

}  // namespace blochgeo
