#include "blochgeo/families.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace blochgeo {

namespace {

ComplexMatrix basis_projector(int dim, int index) {
    ComplexMatrix m(dim, dim);
    m(index, index) = 1.0;
    return m;
}

ComplexMatrix outer(const std::vector<cdouble>& v) {
    const int n = static_cast<int>(v.size());
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

void require_unit_range(double v, const char* name, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw argument_error(std::string(what) + ": parameter " + name + " must lie in [0,1]");
}

}  // namespace

DensityMatrix rho_lb(double p, double q) {
    if (p < 0.0 || q < 0.0 || p + q > 1.0 + 1e-15)
        throw argument_error("rho_lb: requires p, q >= 0 and p + q <= 1");
    ComplexMatrix m(4, 4);
    m(0, 0) = 1.0 - 0.5 * (p + q);
    m(1, 1) = 0.5 * p;
    m(2, 2) = 0.5 * q;
    return DensityMatrix({2, 2}, std::move(m));
}

DensityMatrix rho_ub(double p, double q, int i, int j) {
    require_unit_range(p, "p", "rho_ub");
    require_unit_range(q, "q", "rho_ub");
    if (i == j || i < 0 || i > 1 || j < 0 || j > 1)
        throw argument_error("rho_ub: requires i != j in {0,1}");

    const double w = std::min(p, 1.0 - p);  // weight of the product term
    const double lam = 1.0 - w;
    // Schmidt weights below 1/(2 lam) leave the boundary; q sweeps the
    // saturating range [1/(2 lam), 1].
    const double s_min = 1.0 / (2.0 * lam);
    const double s = s_min + q * (1.0 - s_min);

    std::vector<cdouble> psi(4, 0.0);
    psi[0] = std::sqrt(s);
    psi[3] = std::sqrt(1.0 - s);

    ComplexMatrix m = cdouble(lam, 0.0) * outer(psi) +
                      cdouble(w, 0.0) * basis_projector(4, 2 * i + j);
    return DensityMatrix({2, 2}, std::move(m));
}

DensityMatrix werner(double p) {
    require_unit_range(p, "p", "werner");
    std::vector<cdouble> phi_plus = {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    ComplexMatrix m = cdouble(p, 0.0) * outer(phi_plus) +
                      cdouble((1.0 - p) / 4.0, 0.0) * ComplexMatrix::identity(4);
    return DensityMatrix({2, 2}, std::move(m));
}

DensityMatrix cc_state() {
    ComplexMatrix m(4, 4);
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    return DensityMatrix({2, 2}, std::move(m));
}

ComplexMatrix entangling_unitary(double theta) {
    ComplexMatrix u = ComplexMatrix::identity(4);
    u(0, 0) = std::cos(theta);
    u(3, 3) = std::cos(theta);
    u(3, 0) = std::sin(theta);
    u(0, 3) = -std::sin(theta);
    return u;
}

DensityMatrix mems(double x, double theta) {
    if (x < 0.0 || theta < 0.0 || theta > 1.0 || 2.0 * x + theta > 1.0 + 1e-15)
        throw argument_error("mems: requires x >= 0, theta in [0,1] and 2x + theta <= 1");
    ComplexMatrix m(4, 4);
    m(0, 0) = x + theta / 2.0;
    m(3, 3) = x + theta / 2.0;
    m(1, 1) = 1.0 - 2.0 * x - theta;
    m(0, 3) = theta / 2.0;
    m(3, 0) = theta / 2.0;
    return DensityMatrix({2, 2}, std::move(m));
}

DensityMatrix mems_optimal(double concurrence) {
    require_unit_range(concurrence, "concurrence", "mems_optimal");
    if (concurrence <= 2.0 / 3.0) return mems(1.0 / 3.0 - concurrence / 2.0, concurrence);
    return mems(0.0, concurrence);
}

DensityMatrix memms(double p, double q, int i, int j) { return rho_ub(p, q, i, j); }

std::vector<cdouble> tripartite_saturating(double x, double y) {
    if (!(y >= -1.0 && x >= y && x <= 1.0))
        throw argument_error("tripartite_saturating: requires -1 <= y <= x <= 1");
    std::vector<cdouble> psi(8, 0.0);
    psi[1] = std::sqrt((x - y) / 2.0);  // |001>
    psi[2] = std::sqrt((1.0 + y) / 2.0);  // |010>
    psi[4] = std::sqrt((1.0 - x) / 2.0);  // |100>
    return psi;
}

DensityMatrix tripartite_saturating_state(double x, double y) {
    return DensityMatrix({2, 2, 2}, outer(tripartite_saturating(x, y)));
}

DensityMatrix appendix_extremal(double a_z, double b_z, double eps) {
    if (a_z < 0.0 || b_z < 0.0)
        throw argument_error("appendix_extremal: requires aZ, bZ >= 0");
    if (eps < 0.0 || eps > 0.05)
        throw argument_error("appendix_extremal: requires eps in [0, 0.05]");

    const double s = a_z + b_z;
    const double delta = a_z - b_z;

    // Target correlation length: exactly eps above the extended separable
    // surface at (aZ, bZ).
    double c_zz, c_xy;  // c_xy = c_XX = c_YY
    double z_sep;
    std::ostringstream reason;
    if (s <= 2.0 / 3.0) {
        c_zz = -1.0 / 3.0;
        z_sep = std::sqrt((2.0 - 3.0 * s * s) / 6.0);
        const double z = z_sep + eps;
        c_xy = std::sqrt((z * z - 1.0 / 9.0) / 2.0);
        // PSD of the inner 2x2 block caps c_XX + c_YY.
        if (2.0 * c_xy > std::sqrt(16.0 / 9.0 - delta * delta) + 1e-15)
            reason << "inner block positivity fails at c_XX = " << c_xy;
    } else {
        c_zz = s - 1.0;
        z_sep = std::abs(1.0 - s);
        c_xy = std::sqrt(z_sep * eps + eps * eps / 2.0);
        if (c_xy * c_xy > (1.0 - a_z) * (1.0 - b_z) + 1e-15)
            reason << "inner block positivity fails at c_XX = " << c_xy;
    }
    if (!reason.str().empty())
        throw argument_error("appendix_extremal: no NPT state within ansatz for aZ=" +
                             std::to_string(a_z) + ", bZ=" + std::to_string(b_z) +
                             ", eps=" + std::to_string(eps) + " (" + reason.str() + ")");

    ComplexMatrix m(4, 4);
    m(0, 0) = 0.25 * (1.0 + a_z + b_z + c_zz);
    m(1, 1) = 0.25 * (1.0 + a_z - b_z - c_zz);
    m(2, 2) = 0.25 * (1.0 - a_z + b_z - c_zz);
    m(3, 3) = 0.25 * (1.0 - a_z - b_z + c_zz);
    m(0, 3) = 0.25 * (c_xy - c_xy);  // c_XX - c_YY = 0
    m(3, 0) = m(0, 3);
    m(1, 2) = 0.25 * (2.0 * c_xy);  // c_XX + c_YY
    m(2, 1) = m(1, 2);
    DensityMatrix rho({2, 2}, std::move(m));

    if (eps > 0.0) {
        const Spectrum pt_spec = hermitian_eigenvalues(partial_transpose(rho, 1));
        if (pt_spec.back() >= -1e-12)
            throw argument_error(
                "appendix_extremal: no NPT state within ansatz for aZ=" + std::to_string(a_z) +
                ", bZ=" + std::to_string(b_z) + ", eps=" + std::to_string(eps) +
                " (partial transpose min eigenvalue " + std::to_string(pt_spec.back()) + ")");
    }
    return rho;
}

DensityMatrix diagonal_state(const std::array<double, 4>& probs) {
    double sum = 0.0;
    for (double v : probs) {
        if (v < 0.0) throw argument_error("diagonal_state: probabilities must be nonnegative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw argument_error("diagonal_state: probabilities must sum to 1, got " +
                             std::to_string(sum));
    ComplexMatrix m(4, 4);
    for (int i = 0; i < 4; ++i) m(i, i) = probs[i];
    return DensityMatrix({2, 2}, std::move(m));
}

namespace {

double take_param(const FamilySpec& spec, const std::string& key, std::set<std::string>& used) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw argument_error("family " + spec.name + ": missing parameter '" + key + "'");
    used.insert(key);
    return it->second;
}

double take_param_or(const FamilySpec& spec, const std::string& key, double fallback,
                     std::set<std::string>& used) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) return fallback;
    used.insert(key);
    return it->second;
}

void reject_unknown(const FamilySpec& spec, const std::set<std::string>& used) {
    for (const auto& [key, value] : spec.params)
        if (!used.count(key))
            throw argument_error("family " + spec.name + ": unknown parameter '" + key + "'");
}

}  // namespace

DensityMatrix make_family_state(const FamilySpec& spec) {
    std::set<std::string> used;
    if (spec.name == "lb") {
        const double p = take_param(spec, "p", used);
        const double q = take_param(spec, "q", used);
        reject_unknown(spec, used);
        return rho_lb(p, q);
    }
    if (spec.name == "ub" || spec.name == "memms") {
        const double p = take_param(spec, "p", used);
        const double q = take_param(spec, "q", used);
        const int i = static_cast<int>(take_param_or(spec, "i", 0.0, used));
        const int j = static_cast<int>(take_param_or(spec, "j", 1.0, used));
        reject_unknown(spec, used);
        return rho_ub(p, q, i, j);
    }
    if (spec.name == "werner") {
        const double p = take_param(spec, "p", used);
        reject_unknown(spec, used);
        return werner(p);
    }
    if (spec.name == "mems") {
        if (spec.params.count("c") && !spec.params.count("theta")) {
            const double c = take_param(spec, "c", used);
            reject_unknown(spec, used);
            return mems_optimal(c);
        }
        const double x = take_param(spec, "x", used);
        const double theta = take_param(spec, "theta", used);
        reject_unknown(spec, used);
        return mems(x, theta);
    }
    if (spec.name == "cc") {
        reject_unknown(spec, used);
        return cc_state();
    }
    if (spec.name == "tripartite-saturating") {
        const double x = take_param(spec, "x", used);
        const double y = take_param(spec, "y", used);
        reject_unknown(spec, used);
        return tripartite_saturating_state(x, y);
    }
    if (spec.name == "appendix-extremal") {
        const double a_z = take_param(spec, "aZ", used);
        const double b_z = take_param(spec, "bZ", used);
        const double eps = take_param(spec, "eps", used);
        reject_unknown(spec, used);
        return appendix_extremal(a_z, b_z, eps);
    }
    if (spec.name == "diagonal") {
        const std::array<double, 4> probs = {
            take_param(spec, "p1", used), take_param(spec, "p2", used),
            take_param(spec, "p3", used), take_param(spec, "p4", used)};
        reject_unknown(spec, used);
        return diagonal_state(probs);
    }
    throw argument_error("unknown family '" + spec.name + "'");
}

std::vector<FamilySpec> family_grid(const std::string& name, long count) {
    if (count < 1) throw argument_error("family_grid: count must be positive");
    std::vector<FamilySpec> out;
    const int side = std::max(2, static_cast<int>(std::ceil(std::sqrt(double(count)))));
    auto frac = [&](int k) { return static_cast<double>(k) / (side - 1); };

    if (name == "lb") {
        for (int a = 0; a < side; ++a)
            for (int b = 0; b < side; ++b) {
                const double p = frac(a), q = frac(b);
                if (p + q <= 1.0 + 1e-12)
                    out.push_back({name, {{"p", std::min(p, 1.0 - q)}, {"q", q}}});
            }
    } else if (name == "ub" || name == "memms") {
        for (int a = 0; a < side; ++a)
            for (int b = 0; b < side; ++b)
                out.push_back({name, {{"p", frac(a)}, {"q", frac(b)}}});
    } else if (name == "werner") {
        const int n = static_cast<int>(std::max<long>(2, count));
        for (int k = 0; k < n; ++k)
            out.push_back({name, {{"p", static_cast<double>(k) / (n - 1)}}});
    } else if (name == "mems") {
        const int n = static_cast<int>(std::max<long>(2, count));
        for (int k = 0; k < n; ++k)
            out.push_back({name, {{"c", static_cast<double>(k) / (n - 1)}}});
    } else if (name == "diagonal") {
        // Lattice points of the probability simplex.
        int k = 1;
        while ((k + 1) * (k + 2) * (k + 3) / 6 <= count) ++k;
        for (int n1 = 0; n1 <= k; ++n1)
            for (int n2 = 0; n2 + n1 <= k; ++n2)
                for (int n3 = 0; n3 + n2 + n1 <= k; ++n3) {
                    const int n4 = k - n1 - n2 - n3;
                    out.push_back({name,
                                   {{"p1", double(n1) / k},
                                    {"p2", double(n2) / k},
                                    {"p3", double(n3) / k},
                                    {"p4", double(n4) / k}}});
                }
    } else if (name == "tripartite-saturating") {
        for (int a = 0; a < side; ++a)
            for (int b = 0; b < side; ++b) {
                const double x = frac(a), y = frac(b) * x;
                out.push_back({name, {{"x", x}, {"y", y}}});
            }
    } else if (name == "appendix-extremal") {
        for (int a = 0; a < side; ++a)
            for (int b = 0; b < side; ++b)
                out.push_back({name,
                               {{"aZ", 0.9 * frac(a)}, {"bZ", 0.9 * frac(b)}, {"eps", 1e-3}}});
    } else if (name == "cc") {
        out.push_back({name, {}});
    } else {
        throw argument_error("family_grid: unknown family '" + name + "'");
    }
    return out;
}

}  // namespace blochgeo
