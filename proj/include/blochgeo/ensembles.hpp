#pragma once

// Random-state generation under documented measures and Monte Carlo auditing
// of the model inequalities, producing point clouds and violation reports.

#include <functional>
#include <optional>

#include "blochgeo/bounds.hpp"
#include "blochgeo/families.hpp"

namespace blochgeo {

enum class EnsembleKind {
    HaarPure,          ///< normalized complex-Gaussian vectors
    HsMixed,           ///< Hilbert-Schmidt measure (doubled-space purification)
    FixedRank,         ///< purification with ancilla dimension = rank
    Product,           ///< independent local Hilbert-Schmidt draws, tensored
    SeparableMixture,  ///< convex mixture of 8 random product pure states
    FamilyGrid,        ///< deterministic parameter sweep of a named family
};

EnsembleKind ensemble_kind_from_name(const std::string& name);
std::string ensemble_kind_name(EnsembleKind kind);

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::HsMixed;
    long count = 1;
    std::vector<int> dims = {2, 2};
    uint64_t seed = 0;
    int rank = 0;        ///< fixed-rank only
    std::string family;  ///< family-grid only
};

struct SampleRecord {
    ModelPoint point;
    double purity;
    double concurrence;
    double pt_min_eig;
    RegionVerdict verdict;
    std::string family;          ///< empty for random ensembles
    std::vector<double> params;  ///< family parameters in canonical order
    long seed_offset;
};

struct CheckResult {
    std::string name;
    long samples = 0;
    long violations = 0;
    double max_violation = 0.0;
    long worst_seed_offset = -1;
};

struct AuditReport {
    EnsembleSpec spec;
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// The i-th state of the ensemble. Each sample owns its stream, derived as
/// Rng::derive_seed(spec.seed, i), so generation order is irrelevant.
DensityMatrix sample_state(const EnsembleSpec& spec, long index);

/// Effective sample count (family grids snap to their lattice size).
long effective_count(const EnsembleSpec& spec);

/// Materializes the whole ensemble.
std::vector<DensityMatrix> sample(const EnsembleSpec& spec);

/// Audit check names: theorem1, model-membership, tripartite, monogamy,
/// classifier-soundness, mems-dominance, full-rank-ball, pure-arc.
const std::vector<std::string>& all_check_names();

/// Checks applicable to a spec (used to expand "all").
std::vector<std::string> default_checks(const EnsembleSpec& spec);

/// Runs the named checks over the ensemble. Unknown names or checks
/// incompatible with the spec raise argument_error. Samples may be processed
/// concurrently (BLOCHGEO_THREADS); the report is order-independent.
AuditReport audit(const EnsembleSpec& spec, const std::vector<std::string>& checks);

/// One record per sample, including the classifier verdict and the exact
/// entanglement ground truth. Two-qubit specs only.
std::vector<SampleRecord> point_cloud(const EnsembleSpec& spec);

/// Maximal concurrence attainable at global purity p (the MEMS frontier).
double mems_max_concurrence(double purity);

}  // namespace blochgeo
