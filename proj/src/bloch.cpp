#include "blochgeo/bloch.hpp"

#include <cmath>
#include <sstream>

namespace blochgeo {

namespace {

constexpr double kImagResidueTol = 1e-10;

ComplexMatrix make_pauli(int i) {
    ComplexMatrix m(2, 2);
    switch (i) {
        case 0:  // sigma_x
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 1:  // sigma_y
            m(0, 1) = cdouble(0.0, -1.0);
            m(1, 0) = cdouble(0.0, 1.0);
            break;
        default:  // sigma_z
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

void require_two_qubits(const DensityMatrix& rho, const char* what) {
    if (rho.dims() != std::vector<int>{2, 2})
        throw argument_error(std::string(what) + ": state must have dims [2,2]");
}

double real_expectation(const ComplexMatrix& rho, const ComplexMatrix& op, const char* what) {
    // Tr(rho op) with both factors Hermitian; imaginary part is numerical noise.
    cdouble acc = 0.0;
    for (int i = 0; i < rho.rows; ++i)
        for (int k = 0; k < rho.cols; ++k) acc += rho(i, k) * op(k, i);
    if (std::abs(acc.imag()) > kImagResidueTol) {
        std::ostringstream os;
        os << what << ": expectation value has imaginary part " << acc.imag();
        throw validation_error(os.str());
    }
    return acc.real();
}

double norm3(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

const ComplexMatrix& pauli(int i) {
    if (i < 0 || i > 2) throw argument_error("pauli: index must be 0 (x), 1 (y) or 2 (z)");
    static const ComplexMatrix sx = make_pauli(0);
    static const ComplexMatrix sy = make_pauli(1);
    static const ComplexMatrix sz = make_pauli(2);
    switch (i) {
        case 0: return sx;
        case 1: return sy;
        default: return sz;
    }
}

double BlochDecomposition::a_norm() const { return norm3(a); }
double BlochDecomposition::b_norm() const { return norm3(b); }

double BlochDecomposition::t_norm() const {
    double s = 0.0;
    for (const auto& row : t)
        for (double v : row) s += v * v;
    return std::sqrt(s);
}

BlochDecomposition decompose(const DensityMatrix& rho) {
    require_two_qubits(rho, "decompose");
    static const ComplexMatrix id2 = ComplexMatrix::identity(2);

    BlochDecomposition d;
    for (int i = 0; i < 3; ++i) {
        d.a[i] = real_expectation(rho.matrix(), kron(pauli(i), id2), "decompose");
        d.b[i] = real_expectation(rho.matrix(), kron(id2, pauli(i)), "decompose");
        for (int j = 0; j < 3; ++j)
            d.t[i][j] = real_expectation(rho.matrix(), kron(pauli(i), pauli(j)), "decompose");
    }
    return d;
}

DensityMatrix reconstruct(const BlochDecomposition& d) {
    static const ComplexMatrix id2 = ComplexMatrix::identity(2);
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (int i = 0; i < 3; ++i) {
        m = m + d.a[i] * kron(pauli(i), id2);
        m = m + d.b[i] * kron(id2, pauli(i));
        for (int j = 0; j < 3; ++j) m = m + d.t[i][j] * kron(pauli(i), pauli(j));
    }
    m = cdouble(0.25, 0.0) * m;

    const Spectrum spec = hermitian_eigenvalues(m);
    const double min_eig = spec.back();
    if (min_eig < DensityMatrix::kPsdTol) {
        std::ostringstream os;
        os << "reconstruct: coefficients do not describe a state, min eigenvalue = " << min_eig;
        throw not_a_state_error(os.str(), min_eig);
    }
    return DensityMatrix({2, 2}, std::move(m));
}

double bloch_length(const DensityMatrix& rho) {
    const double d = static_cast<double>(rho.dim());
    double radicand = d * rho.purity() - 1.0;
    if (radicand < 0.0) {
        if (radicand < -1e-10) {
            std::ostringstream os;
            os << "bloch_length: negative radicand " << radicand
               << " exceeds internal consistency tolerance";
            throw validation_error(os.str());
        }
        radicand = 0.0;
    }
    return std::sqrt(radicand);
}

ModelPoint model_point(const DensityMatrix& rho) {
    const BlochDecomposition d = decompose(rho);
    return ModelPoint{d.a_norm(), d.b_norm(), d.t_norm()};
}

namespace {

// The purity form sqrt(2 Tr rho^2 - 1) cancels catastrophically near zero
// length; the Pauli components are linear in the entries and stay accurate.
double qubit_bloch_length(const ComplexMatrix& m) {
    const double ax = 2.0 * m(0, 1).real();
    const double ay = -2.0 * m(0, 1).imag();
    const double az = m(0, 0).real() - m(1, 1).real();
    return std::sqrt(ax * ax + ay * ay + az * az);
}

}  // namespace

std::vector<double> marginal_bloch_lengths(const DensityMatrix& rho) {
    const auto& dims = rho.dims();
    if (dims.size() != 2 && dims.size() != 3)
        throw argument_error("marginal_bloch_lengths: state must be bipartite or tripartite");
    for (size_t i = 1; i < dims.size(); ++i)
        if (dims[i] != dims[0])
            throw argument_error(
                "marginal_bloch_lengths: unsupported configuration, local dimensions differ");

    std::vector<double> lengths;
    for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
        const DensityMatrix marginal = partial_trace(rho, {i});
        lengths.push_back(marginal.dim() == 2 ? qubit_bloch_length(marginal.matrix())
                                              : bloch_length(marginal));
    }
    return lengths;
}

}  // namespace blochgeo
