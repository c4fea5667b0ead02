// pybind11 bindings exposing the main operations with numpy-friendly
// signatures. Density matrices travel as complex128 arrays plus a dims list.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blochgeo/bloch.hpp"
#include "blochgeo/bounds.hpp"
#include "blochgeo/ensembles.hpp"
#include "blochgeo/entanglement.hpp"
#include "blochgeo/families.hpp"
#include "blochgeo/io.hpp"

namespace py = pybind11;
using namespace blochgeo;

namespace {

using carray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

ComplexMatrix matrix_from_array(const carray& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
        throw argument_error("expected a square 2-D complex array");
    const int n = static_cast<int>(arr.shape(0));
    ComplexMatrix m(n, n);
    auto view = arr.unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = view(i, j);
    return m;
}

carray array_from_matrix(const ComplexMatrix& m) {
    carray arr({m.rows, m.cols});
    auto view = arr.mutable_unchecked<2>();
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) view(i, j) = m(i, j);
    return arr;
}

DensityMatrix state_from_array(const carray& arr, const std::vector<int>& dims) {
    return DensityMatrix(dims, matrix_from_array(arr));
}

py::dict verdict_dict(const RegionVerdict& v) {
    py::dict d;
    d["kind"] = region_name(v.kind);
    d["margin"] = v.margin;
    return d;
}

EnsembleSpec make_spec(const std::string& kind, long n, const std::vector<int>& dims,
                       uint64_t seed, int rank, const std::string& family) {
    EnsembleSpec spec;
    spec.kind = ensemble_kind_from_name(kind);
    spec.count = n;
    spec.dims = dims;
    spec.seed = seed;
    spec.rank = rank;
    spec.family = family;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bloch-length geometry of two-qubit states: decomposition, purity and "
              "correlation bounds, state families, entanglement detection and Monte "
              "Carlo audits.";

    py::register_exception<argument_error>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);

    const std::vector<int> two_qubits = {2, 2};

    // bloch
    m.def(
        "decompose",
        [](const carray& rho) {
            const BlochDecomposition d = decompose(state_from_array(rho, {2, 2}));
            py::dict out;
            out["a"] = py::cast(std::vector<double>(d.a.begin(), d.a.end()));
            out["b"] = py::cast(std::vector<double>(d.b.begin(), d.b.end()));
            std::vector<std::vector<double>> t;
            for (const auto& row : d.t) t.emplace_back(row.begin(), row.end());
            out["t"] = py::cast(t);
            return out;
        },
        py::arg("rho"), "Pauli expansion coefficients a, b, t of a two-qubit state.");

    m.def(
        "reconstruct",
        [](const std::vector<double>& a, const std::vector<double>& b,
           const std::vector<std::vector<double>>& t) {
            if (a.size() != 3 || b.size() != 3 || t.size() != 3)
                throw argument_error("reconstruct: a, b need 3 entries and t 3 rows");
            BlochDecomposition d;
            for (int i = 0; i < 3; ++i) {
                d.a[i] = a[i];
                d.b[i] = b[i];
                if (t[i].size() != 3)
                    throw argument_error("reconstruct: t rows need 3 entries");
                for (int j = 0; j < 3; ++j) d.t[i][j] = t[i][j];
            }
            return array_from_matrix(reconstruct(d).matrix());
        },
        py::arg("a"), py::arg("b"), py::arg("t"),
        "State matrix from Bloch coefficients; raises if they leave the state space.");

    m.def(
        "model_point",
        [](const carray& rho) {
            const ModelPoint p = model_point(state_from_array(rho, {2, 2}));
            return py::make_tuple(p.x, p.y, p.z);
        },
        py::arg("rho"), "(|a|, |b|, |T|) coordinates of a two-qubit state.");

    m.def(
        "bloch_length",
        [](const carray& rho, const std::vector<int>& dims) {
            return bloch_length(state_from_array(rho, dims));
        },
        py::arg("rho"), py::arg("dims") = two_qubits);

    m.def(
        "marginal_bloch_lengths",
        [](const carray& rho, const std::vector<int>& dims) {
            return marginal_bloch_lengths(state_from_array(rho, dims));
        },
        py::arg("rho"), py::arg("dims") = two_qubits);

    // bounds
    m.def("purity_bound", &purity_bound, py::arg("delta"), py::arg("d"));
    m.def("triangle_comparison_bound", &triangle_comparison_bound, py::arg("delta"),
          py::arg("d"));
    m.def("tripartite_bound", &tripartite_bound, py::arg("a_len"), py::arg("b_len"),
          py::arg("d"));
    m.def("qubit_monogamy_slack", &qubit_monogamy_slack, py::arg("a_len"), py::arg("b_len"),
          py::arg("c_len"));
    m.def("lower_surface", &lower_surface, py::arg("x"), py::arg("y"));
    m.def("upper_surface", &upper_surface, py::arg("x"), py::arg("y"));
    m.def(
        "in_model", [](double x, double y, double z) { return in_model({x, y, z}); },
        py::arg("x"), py::arg("y"), py::arg("z"));
    m.def(
        "classify_point",
        [](double x, double y, double z) { return verdict_dict(classify_point({x, y, z})); },
        py::arg("x"), py::arg("y"), py::arg("z"));
    m.def(
        "classify_state",
        [](const carray& rho) {
            return verdict_dict(classify_point(model_point(state_from_array(rho, {2, 2}))));
        },
        py::arg("rho"));
    m.def(
        "chsh_violation_possible",
        [](double x, double y, double z) { return chsh_violation_possible({x, y, z}); },
        py::arg("x"), py::arg("y"), py::arg("z"));
    m.def(
        "check_theorem1",
        [](const carray& rho, const std::vector<int>& dims) {
            const BoundReport rep = check_theorem1(state_from_array(rho, dims));
            py::dict out;
            out["bound_value"] = rep.bound_value;
            out["actual_value"] = rep.actual_value;
            out["slack"] = rep.slack;
            out["saturated"] = rep.saturated;
            return out;
        },
        py::arg("rho"), py::arg("dims") = two_qubits);

    // entanglement
    m.def(
        "concurrence",
        [](const carray& rho) { return concurrence(state_from_array(rho, {2, 2})); },
        py::arg("rho"));
    m.def(
        "ppt_min_eigenvalue",
        [](const carray& rho) { return ppt_min_eigenvalue(state_from_array(rho, {2, 2})); },
        py::arg("rho"));
    m.def(
        "linear_entropy",
        [](const carray& rho, const std::vector<int>& dims) {
            return linear_entropy(state_from_array(rho, dims));
        },
        py::arg("rho"), py::arg("dims") = two_qubits);
    m.def(
        "entropy_entanglement_witness",
        [](const carray& rho) {
            return entropy_entanglement_witness(state_from_array(rho, {2, 2}));
        },
        py::arg("rho"));
    m.def(
        "entanglement_report",
        [](const carray& rho) {
            const EntanglementReport rep = entanglement_report(state_from_array(rho, {2, 2}));
            py::dict out;
            out["concurrence"] = rep.concurrence;
            out["pt_min_eigenvalue"] = rep.pt_min_eigenvalue;
            out["entangled"] = rep.entangled;
            out["boundary"] = rep.boundary;
            out["linear_entropy_global"] = rep.linear_entropy_global;
            out["linear_entropy_marginals"] = py::make_tuple(
                rep.linear_entropy_marginals[0], rep.linear_entropy_marginals[1]);
            return out;
        },
        py::arg("rho"));

    // families
    m.def("rho_lb", [](double p, double q) { return array_from_matrix(rho_lb(p, q).matrix()); },
          py::arg("p"), py::arg("q"));
    m.def(
        "rho_ub",
        [](double p, double q, int i, int j) {
            return array_from_matrix(rho_ub(p, q, i, j).matrix());
        },
        py::arg("p"), py::arg("q"), py::arg("i") = 0, py::arg("j") = 1);
    m.def("memms",
          [](double p, double q, int i, int j) {
              return array_from_matrix(memms(p, q, i, j).matrix());
          },
          py::arg("p"), py::arg("q"), py::arg("i") = 0, py::arg("j") = 1);
    m.def("werner", [](double p) { return array_from_matrix(werner(p).matrix()); },
          py::arg("p"));
    m.def("cc_state", [] { return array_from_matrix(cc_state().matrix()); });
    m.def("entangling_unitary",
          [](double theta) { return array_from_matrix(entangling_unitary(theta)); },
          py::arg("theta"));
    m.def("mems",
          [](double x, double theta) { return array_from_matrix(mems(x, theta).matrix()); },
          py::arg("x"), py::arg("theta"));
    m.def("mems_optimal",
          [](double c) { return array_from_matrix(mems_optimal(c).matrix()); },
          py::arg("concurrence"));
    m.def(
        "tripartite_saturating",
        [](double x, double y) {
            const std::vector<cdouble> psi = tripartite_saturating(x, y);
            carray arr(static_cast<py::ssize_t>(psi.size()));
            auto view = arr.mutable_unchecked<1>();
            for (size_t i = 0; i < psi.size(); ++i)
                view(static_cast<py::ssize_t>(i)) = psi[i];
            return arr;
        },
        py::arg("x"), py::arg("y"), "Pure three-qubit state vector saturating monogamy.");
    m.def(
        "appendix_extremal",
        [](double a_z, double b_z, double eps) {
            return array_from_matrix(appendix_extremal(a_z, b_z, eps).matrix());
        },
        py::arg("a_z"), py::arg("b_z"), py::arg("eps"));
    m.def(
        "diagonal_state",
        [](const std::array<double, 4>& probs) {
            return array_from_matrix(diagonal_state(probs).matrix());
        },
        py::arg("probs"));

    // ensembles
    m.def(
        "sample_states",
        [](const std::string& kind, long n, const std::vector<int>& dims, uint64_t seed,
           int rank, const std::string& family) {
            const EnsembleSpec spec = make_spec(kind, n, dims, seed, rank, family);
            py::list out;
            const long total = effective_count(spec);
            for (long i = 0; i < total; ++i)
                out.append(array_from_matrix(sample_state(spec, i).matrix()));
            return out;
        },
        py::arg("kind"), py::arg("n"), py::arg("dims") = two_qubits, py::arg("seed") = 0,
        py::arg("rank") = 0, py::arg("family") = std::string());

    m.def(
        "audit",
        [](const std::string& kind, long n, const std::vector<int>& dims, uint64_t seed,
           const std::vector<std::string>& checks, int rank, const std::string& family) {
            const AuditReport rep =
                audit(make_spec(kind, n, dims, seed, rank, family), checks);
            py::list check_list;
            for (const auto& c : rep.checks) {
                py::dict d;
                d["name"] = c.name;
                d["samples"] = c.samples;
                d["violations"] = c.violations;
                d["max_violation"] = c.max_violation;
                d["worst_seed_offset"] = c.worst_seed_offset;
                check_list.append(d);
            }
            py::dict out;
            out["checks"] = check_list;
            out["passed"] = rep.passed();
            return out;
        },
        py::arg("kind"), py::arg("n"), py::arg("dims") = two_qubits, py::arg("seed") = 0,
        py::arg("checks") = std::vector<std::string>{"all"}, py::arg("rank") = 0,
        py::arg("family") = std::string());

    m.def(
        "point_cloud_csv",
        [](const std::string& kind, long n, uint64_t seed, const std::string& family) {
            return point_cloud_to_csv(
                point_cloud(make_spec(kind, n, {2, 2}, seed, 0, family)));
        },
        py::arg("kind"), py::arg("n"), py::arg("seed") = 0,
        py::arg("family") = std::string());

    m.def("mems_max_concurrence", &mems_max_concurrence, py::arg("purity"));
    m.def("surface_mesh_csv", &surface_mesh_csv, py::arg("grid") = 200);
}
