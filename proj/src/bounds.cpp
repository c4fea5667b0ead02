#include "blochgeo/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace blochgeo {

namespace {

constexpr double kBoundaryTol = 1e-10;

void require_dimension(int d, const char* what) {
    if (d < 2) throw argument_error(std::string(what) + ": local dimension must be >= 2");
}

/// Extended separable bound on ||T_AB||, three cases split at
/// x + y = 2/3 and x + y = 1.
double separable_bound(double x, double y) {
    const double s = x + y;
    if (s <= 2.0 / 3.0) {
        const double radicand = (2.0 - 3.0 * s * s) / 6.0;
        return std::sqrt(std::max(0.0, radicand));
    }
    if (s <= 1.0) return 1.0 - s;
    return s - 1.0;
}

}  // namespace

std::string region_name(Region r) {
    switch (r) {
        case Region::PurelyEntangled: return "purely-entangled";
        case Region::PurelySeparableBall: return "purely-separable-ball";
        case Region::PurelySeparableExtended: return "purely-separable-extended";
        case Region::MixedRegion: return "mixed-region";
        case Region::OutsideModel: return "outside-model";
    }
    return "unknown";
}

double purity_bound(double delta, int d) {
    require_dimension(d, "purity_bound");
    if (delta < 0.0) throw argument_error("purity_bound: delta must be nonnegative");
    return (d - std::sqrt(2.0 * d) * delta + delta * delta) / d;
}

BoundReport check_theorem1(const DensityMatrix& rho) {
    const auto& dims = rho.dims();
    if (dims.size() != 2 || dims[0] != dims[1])
        throw argument_error(
            "check_theorem1: unsupported configuration, requires a bipartite state of equal "
            "local dimensions");
    const std::vector<double> lengths = marginal_bloch_lengths(rho);
    const double delta = std::abs(lengths[0] - lengths[1]);

    BoundReport rep;
    rep.actual_value = rho.purity();
    rep.bound_value = purity_bound(delta, dims[0]);
    rep.slack = rep.bound_value - rep.actual_value;
    rep.saturated = std::abs(rep.slack) <= kSaturationTol;
    return rep;
}

double triangle_comparison_bound(double delta, int d) {
    require_dimension(d, "triangle_comparison_bound");
    if (delta < 0.0) throw argument_error("triangle_comparison_bound: delta must be nonnegative");
    // Largest marginal length is sqrt(d - 1); clamp to the achievable range.
    const double max_delta = std::sqrt(static_cast<double>(d) - 1.0);
    const double dd = std::min(delta, max_delta);
    return (d - dd * dd) / d;
}

double tripartite_bound(double a_len, double b_len, int d) {
    require_dimension(d, "tripartite_bound");
    if (a_len < 0.0 || b_len < 0.0)
        throw argument_error("tripartite_bound: lengths must be nonnegative");
    const double delta = std::abs(a_len - b_len);
    const double rhs = d - 1.0 - std::sqrt(2.0 * d) * delta + delta * delta;
    if (rhs < -1e-10)
        throw argument_error("tripartite_bound: infeasible marginal pair, bound " +
                             std::to_string(rhs));
    return std::max(0.0, rhs);
}

double qubit_monogamy_slack(double a_len, double b_len, double c_len) {
    return 1.0 + b_len - a_len - c_len;
}

double lower_surface(double x, double y) { return std::max(0.0, x + y - 1.0); }

namespace {

double upper_surface_radicand(double x, double y) {
    return 3.0 + x * x + y * y - 4.0 * x * y - 4.0 * std::abs(x - y);
}

}  // namespace

double upper_surface(double x, double y) {
    return std::sqrt(std::max(0.0, upper_surface_radicand(x, y)));
}

bool upper_surface_domain_empty(double x, double y) {
    return upper_surface_radicand(x, y) < -1e-10;
}

bool in_model(const ModelPoint& p) {
    if (p.x < 0.0 || p.y < 0.0 || p.z < 0.0) return false;
    if (upper_surface_domain_empty(p.x, p.y)) return false;
    return p.z >= lower_surface(p.x, p.y) - kBoundaryTol &&
           p.z <= upper_surface(p.x, p.y) + kBoundaryTol;
}

RegionVerdict classify_point(const ModelPoint& p) {
    if (p.x < 0.0 || p.y < 0.0 || p.z < 0.0)
        throw argument_error("classify_point: coordinates must be nonnegative");

    if (!in_model(p)) {
        const double low_violation = lower_surface(p.x, p.y) - p.z;
        double up_violation;
        if (upper_surface_domain_empty(p.x, p.y))
            up_violation = -upper_surface_radicand(p.x, p.y);
        else
            up_violation = p.z - upper_surface(p.x, p.y);
        return {Region::OutsideModel, std::max(low_violation, up_violation)};
    }

    // Entangled region is strict; the boundary is attainable by separable
    // states and reports as mixed.
    const double ent_excess = p.z * p.z - (1.0 - std::abs(p.x * p.x - p.y * p.y));
    if (ent_excess > kBoundaryTol) return {Region::PurelyEntangled, ent_excess};

    const double ball_slack = 1.0 / 3.0 - (p.x * p.x + p.y * p.y + p.z * p.z);
    if (ball_slack >= 0.0) return {Region::PurelySeparableBall, ball_slack};

    const double sep_slack = separable_bound(p.x, p.y) - p.z;
    if (sep_slack >= 0.0) return {Region::PurelySeparableExtended, sep_slack};

    // Between the separable and entangled surfaces: both kinds of states map
    // here. Margin is the smaller clearance to either deciding surface.
    return {Region::MixedRegion, std::min(-ent_excess, -sep_slack)};
}

bool chsh_violation_possible(const ModelPoint& p) { return p.z > 1.0; }

}  // namespace blochgeo
