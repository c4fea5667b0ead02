#include "blochgeo/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace blochgeo {

namespace {

std::string fmt_residual(double r) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << r;
    return os.str();
}

}  // namespace

ComplexMatrix::ComplexMatrix(int r, int c) : rows(r), cols(c) {
    if (r <= 0 || c <= 0) throw argument_error("matrix dimensions must be positive");
    data.assign(static_cast<size_t>(r) * c, cdouble(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(int r, int c) { return ComplexMatrix(r, c); }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows) throw argument_error("matrix product: inner dimensions differ");
    ComplexMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const cdouble aik = a(i, k);
            if (aik == cdouble(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw argument_error("matrix sum: shape mismatch");
    ComplexMatrix out = a;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw argument_error("matrix difference: shape mismatch");
    ComplexMatrix out = a;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
    return out;
}

ComplexMatrix operator*(cdouble s, const ComplexMatrix& a) {
    ComplexMatrix out = a;
    for (auto& v : out.data) v *= s;
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
    ComplexMatrix out = m;
    for (auto& v : out.data) v = std::conj(v);
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const cdouble aij = a(i, j);
            if (aij == cdouble(0.0, 0.0)) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l)
                    out(i * b.rows + k, j * b.cols + l) = aij * b(k, l);
        }
    return out;
}

cdouble trace(const ComplexMatrix& m) {
    if (!m.square()) throw argument_error("trace: matrix not square");
    cdouble t = 0.0;
    for (int i = 0; i < m.rows; ++i) t += m(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& v : m.data) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs_entry(const ComplexMatrix& m) {
    double mx = 0.0;
    for (const auto& v : m.data) mx = std::max(mx, std::abs(v));
    return mx;
}

double hermiticity_residual(const ComplexMatrix& m) {
    if (!m.square()) throw argument_error("hermiticity_residual: matrix not square");
    double mx = 0.0;
    for (int i = 0; i < m.rows; ++i)
        for (int j = i; j < m.cols; ++j)
            mx = std::max(mx, std::abs(m(i, j) - std::conj(m(j, i))));
    return mx;
}

namespace {

// Cyclic complex Jacobi for Hermitian matrices. Converges when the
// off-diagonal Frobenius mass drops below 1e-14 (relative to the matrix
// scale for inputs with norm above 1).
void jacobi_hermitian(ComplexMatrix& a, ComplexMatrix* vecs) {
    const int n = a.rows;
    if (vecs) *vecs = ComplexMatrix::identity(n);
    if (n == 1) return;

    const double scale = std::max(1.0, frobenius_norm(a));
    const double tol = 1e-14 * scale;
    const int max_sweeps = 60;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < max_sweeps && off_norm() > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cdouble apq = a(p, q);
                const double abs_apq = std::abs(apq);
                if (abs_apq == 0.0) continue;

                // Phase transform makes the pivot real, then a real rotation
                // annihilates it: U = diag(1, f) * R(c, s) on columns (p, q).
                const cdouble f = std::conj(apq) / abs_apq;  // e^{-i arg(apq)}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * abs_apq);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                a(p, p) = app - t * abs_apq;
                a(q, q) = aqq + t * abs_apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cdouble akp = a(k, p);
                    const cdouble akq = a(k, q) * f;
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                if (vecs) {
                    ComplexMatrix& v = *vecs;
                    for (int k = 0; k < n; ++k) {
                        const cdouble vkp = v(k, p);
                        const cdouble vkq = v(k, q) * f;
                        v(k, p) = c * vkp - s * vkq;
                        v(k, q) = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
}

ComplexMatrix symmetrized(const ComplexMatrix& m, const char* what) {
    if (!m.square()) {
        throw validation_error(std::string(what) + ": matrix not square (" +
                               std::to_string(m.rows) + "x" + std::to_string(m.cols) + ")");
    }
    const double res = hermiticity_residual(m);
    if (res > 1e-10) {
        throw validation_error(std::string(what) + ": matrix not Hermitian, max |M - M^dag| = " +
                               fmt_residual(res));
    }
    ComplexMatrix h = m;
    for (int i = 0; i < m.rows; ++i) {
        h(i, i) = cdouble(h(i, i).real(), 0.0);
        for (int j = i + 1; j < m.cols; ++j) {
            const cdouble avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            h(i, j) = avg;
            h(j, i) = std::conj(avg);
        }
    }
    return h;
}

}  // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
    ComplexMatrix a = symmetrized(m, "hermitian_eigenvalues");
    jacobi_hermitian(a, nullptr);
    Spectrum vals(a.rows);
    for (int i = 0; i < a.rows; ++i) vals[i] = a(i, i).real();
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    return vals;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    ComplexMatrix a = symmetrized(m, "hermitian_eigensystem");
    ComplexMatrix vecs;
    jacobi_hermitian(a, &vecs);

    const int n = a.rows;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem sys;
    sys.values.resize(n);
    sys.vectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        sys.values[k] = a(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) sys.vectors(r, k) = vecs(r, order[k]);
    }
    return sys;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
    EigenSystem sys = hermitian_eigensystem(m);
    const int n = m.rows;
    ComplexMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        double lam = sys.values[k];
        if (lam < 0.0) {
            if (lam < -1e-10)
                throw validation_error("hermitian_sqrt: eigenvalue below PSD tolerance, min = " +
                                       fmt_residual(lam));
            lam = 0.0;
        }
        const double root = std::sqrt(lam);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                out(r, c) += root * sys.vectors(r, k) * std::conj(sys.vectors(c, k));
    }
    return out;
}

DensityMatrix::DensityMatrix(std::vector<int> dims, ComplexMatrix m)
    : dims_(std::move(dims)), mat_(std::move(m)) {
    if (dims_.empty()) throw argument_error("density matrix: empty dimension list");
    long total = 1;
    for (int d : dims_) {
        if (d < 2) throw argument_error("density matrix: subsystem dimensions must be >= 2");
        total *= d;
    }
    if (!mat_.square() || mat_.rows != total) {
        throw argument_error("density matrix: matrix size " + std::to_string(mat_.rows) + "x" +
                             std::to_string(mat_.cols) + " does not match dims product " +
                             std::to_string(total));
    }
    const double herm = hermiticity_residual(mat_);
    if (herm > kHermitianTol)
        throw validation_error("density matrix not Hermitian: max |M - M^dag| = " +
                               fmt_residual(herm));
    const double tr_res = std::abs(trace(mat_) - cdouble(1.0, 0.0));
    if (tr_res > kTraceTol)
        throw validation_error("density matrix trace differs from 1: |Tr M - 1| = " +
                               fmt_residual(tr_res));
    const Spectrum spec = hermitian_eigenvalues(mat_);
    const double min_eig = spec.back();
    if (min_eig < kPsdTol)
        throw validation_error("density matrix not positive semidefinite: min eigenvalue = " +
                               fmt_residual(min_eig));
}

double DensityMatrix::purity() const {
    // Tr rho^2 = ||rho||_F^2 for Hermitian rho.
    double s = 0.0;
    for (const auto& v : mat_.data) s += std::norm(v);
    return s;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const auto& dims = rho.dims();
    const int n = static_cast<int>(dims.size());
    std::vector<int> k = keep;
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    if (k.empty()) throw argument_error("partial_trace: keep set is empty");
    if (static_cast<int>(k.size()) == n)
        throw argument_error("partial_trace: keep set covers all subsystems");
    for (int idx : k)
        if (idx < 0 || idx >= n)
            throw argument_error("partial_trace: subsystem index " + std::to_string(idx) +
                                 " out of range");

    std::vector<int> traced;
    for (int i = 0; i < n; ++i)
        if (!std::binary_search(k.begin(), k.end(), i)) traced.push_back(i);

    // Row-major strides of the full index.
    std::vector<long> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

    long keep_dim = 1, trace_dim = 1;
    for (int i : k) keep_dim *= dims[i];
    for (int i : traced) trace_dim *= dims[i];

    auto unpack = [](long idx, const std::vector<int>& subdims, std::vector<int>& out) {
        for (int i = static_cast<int>(subdims.size()) - 1; i >= 0; --i) {
            out[i] = static_cast<int>(idx % subdims[i]);
            idx /= subdims[i];
        }
    };

    std::vector<int> keep_dims_v, trace_dims_v;
    for (int i : k) keep_dims_v.push_back(dims[i]);
    for (int i : traced) trace_dims_v.push_back(dims[i]);

    ComplexMatrix out(static_cast<int>(keep_dim), static_cast<int>(keep_dim));
    std::vector<int> ri(k.size()), ci(k.size()), ti(traced.size());
    const ComplexMatrix& m = rho.matrix();
    for (long r = 0; r < keep_dim; ++r) {
        unpack(r, keep_dims_v, ri);
        for (long c = 0; c < keep_dim; ++c) {
            unpack(c, keep_dims_v, ci);
            cdouble acc = 0.0;
            for (long t = 0; t < trace_dim; ++t) {
                if (!traced.empty()) unpack(t, trace_dims_v, ti);
                long row = 0, col = 0;
                for (size_t i = 0; i < k.size(); ++i) {
                    row += ri[i] * stride[k[i]];
                    col += ci[i] * stride[k[i]];
                }
                for (size_t i = 0; i < traced.size(); ++i) {
                    row += ti[i] * stride[traced[i]];
                    col += ti[i] * stride[traced[i]];
                }
                acc += m(static_cast<int>(row), static_cast<int>(col));
            }
            out(static_cast<int>(r), static_cast<int>(c)) = acc;
        }
    }

    std::vector<int> out_dims;
    for (int i : k) out_dims.push_back(dims[i]);
    return DensityMatrix(out_dims, std::move(out));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem) {
    const auto& dims = rho.dims();
    if (dims.size() != 2) throw argument_error("partial_transpose: state must be bipartite");
    if (subsystem < 0 || subsystem > 1)
        throw argument_error("partial_transpose: subsystem index " + std::to_string(subsystem) +
                             " out of range");
    const int da = dims[0], db = dims[1];
    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix out(m.rows, m.cols);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            for (int kk = 0; kk < da; ++kk)
                for (int l = 0; l < db; ++l) {
                    if (subsystem == 0)
                        out(kk * db + j, i * db + l) = m(i * db + j, kk * db + l);
                    else
                        out(i * db + l, kk * db + j) = m(i * db + j, kk * db + l);
                }
    return out;
}

namespace {

uint64_t splitmix64_next(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : state_) w = splitmix64_next(sm);
    if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0)
        state_[0] = 0x9E3779B97F4A7C15ULL;
}

uint64_t Rng::next_u64() {
    // xoshiro256++
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

cdouble Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return cdouble(re, im) / std::sqrt(2.0);
}

uint64_t Rng::derive_seed(uint64_t master, uint64_t worker) {
    uint64_t sm = master ^ worker;
    return splitmix64_next(sm);
}

}  // namespace blochgeo
