#include "blochgeo/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "blochgeo/entanglement.hpp"

namespace blochgeo {

namespace {

constexpr double kAuditTol = 1e-9;

long product_of(const std::vector<int>& dims) {
    long d = 1;
    for (int v : dims) d *= v;
    return d;
}

ComplexMatrix ginibre(Rng& rng, int rows, int cols) {
    ComplexMatrix g(rows, cols);
    for (auto& v : g.data) v = rng.complex_normal();
    return g;
}

/// rho = G G^dag / Tr(G G^dag): partial trace of a Haar-random purification
/// with ancilla dimension = cols.
ComplexMatrix wishart_state(Rng& rng, int dim, int ancilla) {
    const ComplexMatrix g = ginibre(rng, dim, ancilla);
    ComplexMatrix rho = g * dagger(g);
    const double tr = trace(rho).real();
    for (auto& v : rho.data) v /= tr;
    return rho;
}

std::vector<cdouble> haar_vector(Rng& rng, int dim) {
    std::vector<cdouble> v(dim);
    double norm2 = 0.0;
    for (auto& c : v) {
        c = rng.complex_normal();
        norm2 += std::norm(c);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : v) c *= inv;
    return v;
}

ComplexMatrix projector(const std::vector<cdouble>& v) {
    const int n = static_cast<int>(v.size());
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

int thread_count() {
    const char* env = std::getenv("BLOCHGEO_THREADS");
    if (!env) return 1;
    const int n = std::atoi(env);
    return std::max(1, n);
}

/// Deterministic order-independent accumulator: worst sample is the largest
/// residual, ties resolved toward the smallest offset.
struct CheckAccumulator {
    long samples = 0;
    long violations = 0;
    double max_violation = 0.0;
    long worst_seed_offset = -1;

    void add(double residual, bool violated, long offset) {
        ++samples;
        if (violated) ++violations;
        if (residual > max_violation ||
            (residual == max_violation && residual > 0.0 &&
             (worst_seed_offset < 0 || offset < worst_seed_offset))) {
            max_violation = residual;
            worst_seed_offset = offset;
        }
    }

    void merge(const CheckAccumulator& other) {
        samples += other.samples;
        violations += other.violations;
        if (other.max_violation > max_violation ||
            (other.max_violation == max_violation && other.max_violation > 0.0 &&
             (worst_seed_offset < 0 ||
              (other.worst_seed_offset >= 0 && other.worst_seed_offset < worst_seed_offset)))) {
            max_violation = other.max_violation;
            worst_seed_offset = other.worst_seed_offset;
        }
    }
};

bool is_two_qubit(const EnsembleSpec& spec) { return spec.dims == std::vector<int>{2, 2}; }

bool equal_local_dims(const EnsembleSpec& spec) {
    for (int d : spec.dims)
        if (d != spec.dims[0]) return false;
    return true;
}

bool check_applicable(const std::string& name, const EnsembleSpec& spec) {
    if (name == "theorem1")
        return spec.dims.size() == 2 && equal_local_dims(spec);
    if (name == "model-membership" || name == "classifier-soundness" ||
        name == "mems-dominance" || name == "full-rank-ball")
        return is_two_qubit(spec);
    if (name == "pure-arc") return is_two_qubit(spec) && spec.kind == EnsembleKind::HaarPure;
    if (name == "tripartite")
        return spec.dims.size() == 3 && equal_local_dims(spec) &&
               spec.kind == EnsembleKind::HaarPure;
    if (name == "monogamy")
        return spec.dims == std::vector<int>{2, 2, 2} && spec.kind == EnsembleKind::HaarPure;
    throw argument_error("unknown audit check '" + name + "'");
}

}  // namespace

EnsembleKind ensemble_kind_from_name(const std::string& name) {
    if (name == "haar-pure") return EnsembleKind::HaarPure;
    if (name == "hs-mixed") return EnsembleKind::HsMixed;
    if (name == "fixed-rank") return EnsembleKind::FixedRank;
    if (name == "product") return EnsembleKind::Product;
    if (name == "separable-mixture") return EnsembleKind::SeparableMixture;
    if (name == "family-grid") return EnsembleKind::FamilyGrid;
    throw argument_error("unknown ensemble kind '" + name + "'");
}

std::string ensemble_kind_name(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::HaarPure: return "haar-pure";
        case EnsembleKind::HsMixed: return "hs-mixed";
        case EnsembleKind::FixedRank: return "fixed-rank";
        case EnsembleKind::Product: return "product";
        case EnsembleKind::SeparableMixture: return "separable-mixture";
        case EnsembleKind::FamilyGrid: return "family-grid";
    }
    return "unknown";
}

bool AuditReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.violations == 0; });
}

namespace {

void validate_spec(const EnsembleSpec& spec) {
    if (spec.count < 1) throw argument_error("ensemble: count must be >= 1");
    if (spec.kind == EnsembleKind::FamilyGrid) {
        if (spec.family.empty())
            throw argument_error("ensemble: family-grid requires a family name");
        return;
    }
    if (spec.dims.empty()) throw argument_error("ensemble: dims must be nonempty");
    for (int d : spec.dims)
        if (d < 2) throw argument_error("ensemble: subsystem dimensions must be >= 2");
    if (spec.kind == EnsembleKind::FixedRank) {
        const long total = product_of(spec.dims);
        if (spec.rank < 1 || spec.rank > total)
            throw argument_error("ensemble: fixed-rank requires 1 <= rank <= total dimension");
    }
}

}  // namespace

long effective_count(const EnsembleSpec& spec) {
    validate_spec(spec);
    if (spec.kind == EnsembleKind::FamilyGrid)
        return static_cast<long>(family_grid(spec.family, spec.count).size());
    return spec.count;
}

DensityMatrix sample_state(const EnsembleSpec& spec, long index) {
    validate_spec(spec);
    if (index < 0) throw argument_error("sample_state: index must be nonnegative");

    if (spec.kind == EnsembleKind::FamilyGrid) {
        const auto grid = family_grid(spec.family, spec.count);
        if (index >= static_cast<long>(grid.size()))
            throw argument_error("sample_state: index beyond family grid");
        return make_family_state(grid[index]);
    }

    const int total = static_cast<int>(product_of(spec.dims));
    Rng rng(Rng::derive_seed(spec.seed, static_cast<uint64_t>(index)));

    switch (spec.kind) {
        case EnsembleKind::HaarPure:
            return DensityMatrix(spec.dims, projector(haar_vector(rng, total)));
        case EnsembleKind::HsMixed:
            return DensityMatrix(spec.dims, wishart_state(rng, total, total));
        case EnsembleKind::FixedRank:
            return DensityMatrix(spec.dims, wishart_state(rng, total, spec.rank));
        case EnsembleKind::Product: {
            ComplexMatrix m = wishart_state(rng, spec.dims[0], spec.dims[0]);
            for (size_t k = 1; k < spec.dims.size(); ++k)
                m = kron(m, wishart_state(rng, spec.dims[k], spec.dims[k]));
            return DensityMatrix(spec.dims, std::move(m));
        }
        case EnsembleKind::SeparableMixture: {
            // 8 product terms exceed what any two-qubit separable state needs;
            // heuristic coverage, not a decomposition.
            constexpr int kComponents = 8;
            std::array<double, kComponents> w{};
            double wsum = 0.0;
            for (auto& v : w) {
                double u = rng.uniform();
                while (u <= 0.0) u = rng.uniform();
                v = -std::log(u);
                wsum += v;
            }
            ComplexMatrix m(total, total);
            for (int c = 0; c < kComponents; ++c) {
                ComplexMatrix term = projector(haar_vector(rng, spec.dims[0]));
                for (size_t k = 1; k < spec.dims.size(); ++k)
                    term = kron(term, projector(haar_vector(rng, spec.dims[k])));
                m = m + cdouble(w[c] / wsum, 0.0) * term;
            }
            return DensityMatrix(spec.dims, std::move(m));
        }
        default:
            throw argument_error("sample_state: unhandled ensemble kind");
    }
}

std::vector<DensityMatrix> sample(const EnsembleSpec& spec) {
    const long n = effective_count(spec);
    std::vector<DensityMatrix> out;
    out.reserve(n);
    for (long i = 0; i < n; ++i) out.push_back(sample_state(spec, i));
    return out;
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {
        "theorem1",  "model-membership", "tripartite",     "monogamy",
        "classifier-soundness", "mems-dominance", "full-rank-ball", "pure-arc"};
    return names;
}

std::vector<std::string> default_checks(const EnsembleSpec& spec) {
    std::vector<std::string> out;
    for (const auto& name : all_check_names())
        if (check_applicable(name, spec)) out.push_back(name);
    return out;
}

double mems_max_concurrence(double purity) {
    if (purity < 0.25 - 1e-10 || purity > 1.0 + 1e-10)
        throw argument_error("mems_max_concurrence: purity out of the two-qubit range");
    if (purity <= 1.0 / 3.0) return 0.0;
    if (purity <= 5.0 / 9.0) return std::sqrt(2.0 * (purity - 1.0 / 3.0));
    return 0.5 * (1.0 + std::sqrt(2.0 * std::min(1.0, purity) - 1.0));
}

namespace {

struct SampleChecks {
    // Residuals are the raw violation amounts before tolerance; a check
    // counts as violated only beyond its tolerance.
    static void run(const std::string& name, const DensityMatrix& rho, long offset,
                    CheckAccumulator& acc) {
        if (name == "theorem1") {
            const BoundReport rep = check_theorem1(rho);
            const double residual = std::max(0.0, -rep.slack);
            acc.add(residual, residual > kAuditTol, offset);
        } else if (name == "model-membership") {
            const ModelPoint p = model_point(rho);
            double residual = std::max(0.0, lower_surface(p.x, p.y) - p.z);
            if (upper_surface_domain_empty(p.x, p.y))
                residual = std::max(residual, 1.0);
            else
                residual = std::max(residual, p.z - upper_surface(p.x, p.y));
            residual = std::max(0.0, residual);
            acc.add(residual, residual > 1e-10, offset);
        } else if (name == "tripartite") {
            const std::vector<double> len = marginal_bloch_lengths(rho);
            const int d = rho.dims()[0];
            double residual = 0.0;
            for (int c = 0; c < 3; ++c) {
                const double a = len[(c + 1) % 3], b = len[(c + 2) % 3];
                const double slack = tripartite_bound(a, b, d) - len[c] * len[c];
                residual = std::max(residual, -slack);
            }
            residual = std::max(0.0, residual);
            acc.add(residual, residual > kAuditTol, offset);
        } else if (name == "monogamy") {
            const std::vector<double> len = marginal_bloch_lengths(rho);
            double residual = 0.0;
            for (int mid = 0; mid < 3; ++mid) {
                const double slack = qubit_monogamy_slack(len[(mid + 1) % 3], len[mid],
                                                          len[(mid + 2) % 3]);
                residual = std::max(residual, -slack);
            }
            residual = std::max(0.0, residual);
            acc.add(residual, residual > kAuditTol, offset);
        } else if (name == "classifier-soundness") {
            const RegionVerdict verdict = classify_point(model_point(rho));
            const double pt_min = ppt_min_eigenvalue(rho);
            double residual = 0.0;
            if (verdict.kind == Region::PurelyEntangled && pt_min >= -1e-10)
                residual = pt_min + 1e-10;  // claimed entangled, found PPT
            if ((verdict.kind == Region::PurelySeparableBall ||
                 verdict.kind == Region::PurelySeparableExtended) &&
                pt_min < -1e-10)
                residual = -pt_min;  // claimed separable, found NPT
            acc.add(residual, residual > 0.0, offset);
        } else if (name == "mems-dominance") {
            const double c = concurrence(rho);
            const double cmax = mems_max_concurrence(rho.purity());
            const double residual = std::max(0.0, c - cmax);
            acc.add(residual, residual > 1e-6, offset);
        } else if (name == "full-rank-ball") {
            const double global = bloch_length(rho);
            double residual = 0.0;
            if (global < 1.0 / 3.0 - 1e-6) {
                const Spectrum spec = hermitian_eigenvalues(rho.matrix());
                if (spec.back() <= 1e-10) residual = 1e-10 - spec.back();
            }
            acc.add(residual, residual > 0.0, offset);
        } else if (name == "pure-arc") {
            const ModelPoint p = model_point(rho);
            const double radius = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
            const double residual =
                std::max(std::abs(p.x - p.y), std::abs(radius - std::sqrt(3.0)));
            acc.add(residual, residual > 1e-10, offset);
        } else {
            throw argument_error("unknown audit check '" + name + "'");
        }
    }
};

}  // namespace

AuditReport audit(const EnsembleSpec& spec, const std::vector<std::string>& checks) {
    validate_spec(spec);

    std::vector<std::string> names;
    if (checks.size() == 1 && checks[0] == "all") {
        names = default_checks(spec);
    } else {
        for (const auto& name : checks) {
            if (!check_applicable(name, spec))
                throw argument_error("audit check '" + name +
                                     "' is incompatible with the ensemble spec");
            names.push_back(name);
        }
    }
    if (names.empty()) throw argument_error("audit: no applicable checks for this spec");

    const long n = effective_count(spec);
    const int workers = std::min<long>(thread_count(), n);

    std::vector<std::vector<CheckAccumulator>> partials(
        workers, std::vector<CheckAccumulator>(names.size()));

    auto worker_fn = [&](int w) {
        for (long i = w; i < n; i += workers) {
            const DensityMatrix rho = sample_state(spec, i);
            for (size_t c = 0; c < names.size(); ++c)
                SampleChecks::run(names[c], rho, i, partials[w][c]);
        }
    };

    if (workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn, w);
        for (auto& t : pool) t.join();
    }

    AuditReport report;
    report.spec = spec;
    report.spec.count = n;
    for (size_t c = 0; c < names.size(); ++c) {
        CheckAccumulator acc;
        for (int w = 0; w < workers; ++w) acc.merge(partials[w][c]);
        report.checks.push_back(
            {names[c], acc.samples, acc.violations, acc.max_violation, acc.worst_seed_offset});
    }
    return report;
}

std::vector<SampleRecord> point_cloud(const EnsembleSpec& spec) {
    validate_spec(spec);
    std::vector<FamilySpec> grid;
    if (spec.kind == EnsembleKind::FamilyGrid) {
        grid = family_grid(spec.family, spec.count);
        if (!grid.empty()) {
            const DensityMatrix probe = make_family_state(grid.front());
            if (probe.dims() != std::vector<int>{2, 2})
                throw argument_error("point_cloud: family '" + spec.family +
                                     "' is not a two-qubit family");
        }
    } else if (!is_two_qubit(spec)) {
        throw argument_error("point_cloud: requires a two-qubit spec");
    }

    const long n = effective_count(spec);
    std::vector<SampleRecord> records(n);

    const int workers = std::min<long>(thread_count(), n);
    auto worker_fn = [&](int w) {
        for (long i = w; i < n; i += workers) {
            const DensityMatrix rho = sample_state(spec, i);
            SampleRecord rec;
            rec.point = model_point(rho);
            rec.purity = rho.purity();
            rec.concurrence = concurrence(rho);
            rec.pt_min_eig = ppt_min_eigenvalue(rho);
            rec.verdict = classify_point(rec.point);
            rec.seed_offset = i;
            if (spec.kind == EnsembleKind::FamilyGrid) {
                rec.family = spec.family;
                for (const auto& [key, value] : grid[i].params) rec.params.push_back(value);
            }
            records[i] = std::move(rec);
        }
    };

    if (workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn, w);
        for (auto& t : pool) t.join();
    }
    return records;
}

}  // namespace blochgeo
