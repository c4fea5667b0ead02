#pragma once

// Dense complex-matrix numerics for small Hilbert spaces: validated density
// operators, a cyclic-Jacobi Hermitian eigensolver, tensor products, partial
// trace / partial transpose, and deterministic pseudo-random streams.

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace blochgeo {

using cdouble = std::complex<double>;

/// Structurally unusable argument: wrong dimensions, out-of-range parameter.
class argument_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A matrix failed a physical invariant. The message names the violated
/// property and the measured residual.
class validation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bloch coefficients that do not describe a state (reconstruction not PSD).
class not_a_state_error : public validation_error {
  public:
    not_a_state_error(const std::string& msg, double min_eigenvalue)
        : validation_error(msg), min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const { return min_eigenvalue_; }

  private:
    double min_eigenvalue_;
};

/// Dense row-major complex matrix.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<cdouble> data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c);

    cdouble& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const cdouble& operator()(int r, int c) const {
        return data[static_cast<size_t>(r) * cols + c];
    }
    bool square() const { return rows == cols; }

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int r, int c);
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble s, const ComplexMatrix& a);

ComplexMatrix dagger(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);

/// Row-major Kronecker product; the left factor is subsystem 0.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

cdouble trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
double max_abs_entry(const ComplexMatrix& m);
/// max_ij |m - m†|
double hermiticity_residual(const ComplexMatrix& m);

/// Real eigenvalues sorted descending.
using Spectrum = std::vector<double>;

struct EigenSystem {
    Spectrum values;        ///< descending
    ComplexMatrix vectors;  ///< column k is the eigenvector of values[k]
};

/// Eigenvalues of a Hermitian matrix (Hermitian within 1e-10) via cyclic
/// Jacobi rotations, sorted descending.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Hermitian matrix function helper: f applied to the (clamped) spectrum.
/// Eigenvalues above -1e-10 but below zero are snapped to zero first.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m);

/// Validated density operator over an ordered list of subsystem dimensions.
/// Subsystem index 0 is the leftmost tensor factor (row-major Kronecker
/// convention, matching kron()).
class DensityMatrix {
  public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kPsdTol = -1e-10;

    /// Validates Hermiticity, unit trace and positive semidefiniteness;
    /// throws validation_error naming the violated invariant.
    DensityMatrix(std::vector<int> dims, ComplexMatrix m);

    const std::vector<int>& dims() const { return dims_; }
    const ComplexMatrix& matrix() const { return mat_; }
    int dim() const { return mat_.rows; }

    /// Tr rho^2, computed as the squared Frobenius norm.
    double purity() const;

  private:
    std::vector<int> dims_;
    ComplexMatrix mat_;
};

/// Marginal on the kept subsystems (indices ascending, nonempty proper subset).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Partial transpose of a bipartite state on the chosen subsystem. The result
/// is Hermitian with unit trace but in general not PSD, hence a plain matrix.
ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem);

/// Deterministic xoshiro256++ stream. Streams are single-owner; derive one
/// per worker from a master seed with derive_seed (master XOR worker index,
/// re-hashed through the splitmix64 finalizer).
class Rng {
  public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    /// uniform in [0, 1)
    double uniform();
    /// standard normal (Box-Muller)
    double normal();
    /// complex standard normal: (N(0,1) + i N(0,1)) / sqrt(2)
    cdouble complex_normal();

    static uint64_t derive_seed(uint64_t master, uint64_t worker);

  private:
    std::array<uint64_t, 4> state_{};
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace blochgeo
