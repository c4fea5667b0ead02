#include "blochgeo/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "blochgeo/bloch.hpp"

namespace blochgeo {

namespace {

constexpr double kEntangledTol = -1e-10;
constexpr double kBoundaryUpper = 1e-9;

void require_two_qubits(const DensityMatrix& rho, const char* what) {
    if (rho.dims() != std::vector<int>{2, 2})
        throw argument_error(std::string(what) + ": state must have dims [2,2]");
}

const ComplexMatrix& spin_flip_operator() {
    // sigma_y x sigma_y, written out (real, symmetric).
    static const ComplexMatrix s = [] {
        ComplexMatrix m(4, 4);
        m(0, 3) = -1.0;
        m(1, 2) = 1.0;
        m(2, 1) = 1.0;
        m(3, 0) = -1.0;
        return m;
    }();
    return s;
}

}  // namespace

double concurrence(const DensityMatrix& rho) {
    require_two_qubits(rho, "concurrence");
    const ComplexMatrix& s = spin_flip_operator();
    const ComplexMatrix flipped = s * conjugate(rho.matrix()) * s;
    const ComplexMatrix root = hermitian_sqrt(rho.matrix());
    const ComplexMatrix m = root * flipped * root;

    Spectrum spec = hermitian_eigenvalues(m);
    std::array<double, 4> lambdas{};
    for (int k = 0; k < 4; ++k) lambdas[k] = std::sqrt(std::max(0.0, spec[k]));
    return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

double ppt_min_eigenvalue(const DensityMatrix& rho) {
    require_two_qubits(rho, "ppt_min_eigenvalue");
    const Spectrum spec = hermitian_eigenvalues(partial_transpose(rho, 1));
    return spec.back();
}

double linear_entropy(const DensityMatrix& rho) { return 1.0 - rho.purity(); }

bool entropy_entanglement_witness(const DensityMatrix& rho) {
    require_two_qubits(rho, "entropy_entanglement_witness");
    const BlochDecomposition d = decompose(rho);
    const double x = d.a_norm(), y = d.b_norm(), z = d.t_norm();
    return z * z > 1.0 - std::abs(x * x - y * y) + 1e-10;
}

EntanglementReport entanglement_report(const DensityMatrix& rho) {
    require_two_qubits(rho, "entanglement_report");
    EntanglementReport rep;
    rep.concurrence = concurrence(rho);
    rep.pt_min_eigenvalue = ppt_min_eigenvalue(rho);
    rep.entangled = rep.pt_min_eigenvalue < kEntangledTol;
    rep.boundary =
        rep.pt_min_eigenvalue >= kEntangledTol && rep.pt_min_eigenvalue <= kBoundaryUpper;
    rep.linear_entropy_global = linear_entropy(rho);
    rep.linear_entropy_marginals = {linear_entropy(partial_trace(rho, {0})),
                                    linear_entropy(partial_trace(rho, {1}))};
    return rep;
}

}  // namespace blochgeo
