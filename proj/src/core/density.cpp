#include "core/density.hpp"

#include <cmath>

#include "core/eig.hpp"
#include "core/errors.hpp"

namespace qslkit {

PureState::PureState(std::vector<cplx> amps) : amplitudes(std::move(amps)) {
    if (amplitudes.empty()) throw InvalidStateError("PureState: empty amplitude vector");
    double n2 = 0.0;
    for (const auto& a : amplitudes) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > 1e-12) throw InvalidStateError("PureState: norm differs from 1");
}

DensityMatrix::DensityMatrix(Cmat m) : mat_(std::move(m)) {
    if (!mat_.square() || mat_.rows() == 0) throw InvalidStateError("DensityMatrix: not square");
    if (!mat_.is_hermitian(1e-12)) throw InvalidStateError("DensityMatrix: not Hermitian");
    if (std::abs(mat_.trace() - 1.0) > 1e-12) throw InvalidStateError("DensityMatrix: trace differs from 1");
    if (min_eigenvalue(mat_, 1e-10) < -1e-10)
        throw InvalidStateError("DensityMatrix: negative eigenvalue beyond tolerance");
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    Cmat m = Cmat::identity(dim);
    m *= cplx(1.0 / static_cast<double>(dim), 0.0);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
    const std::size_t n = psi.dim();
    Cmat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::basis_projector(std::size_t dim, std::size_t k) {
    if (k >= dim) throw UsageError("basis_projector: index out of range");
    Cmat m(dim, dim);
    m(k, k) = 1.0;
    return DensityMatrix(std::move(m));
}

double hs_inner(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) throw UsageError("hs_inner: dimension mismatch");
    return trace_product(a.mat(), b.mat()).real();
}

double purity(const DensityMatrix& a) { return trace_product(a.mat(), a.mat()).real(); }

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(kron(a.mat(), b.mat()));
}

DensityMatrix partial_trace(const DensityMatrix& a, const std::vector<std::size_t>& dims,
                            std::size_t keep) {
    std::size_t prod = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw UsageError("partial_trace: zero subsystem dimension");
        prod *= d;
    }
    if (prod != a.dim()) throw UsageError("partial_trace: subsystem dims do not factor the state");
    if (keep >= dims.size()) throw UsageError("partial_trace: keep index out of range");

    const std::size_t dk = dims[keep];
    // strides of each subsystem index in the flat row index
    std::vector<std::size_t> stride(dims.size());
    std::size_t s = 1;
    for (std::size_t k = dims.size(); k-- > 0;) {
        stride[k] = s;
        s *= dims[k];
    }

    Cmat r(dk, dk);
    const std::size_t env = a.dim() / dk;  // combined dimension of traced-out subsystems
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            cplx sum = 0.0;
            for (std::size_t e = 0; e < env; ++e) {
                // unpack e into the traced-out subsystem indices
                std::size_t row = i * stride[keep], col = j * stride[keep];
                std::size_t rem = e;
                for (std::size_t k = dims.size(); k-- > 0;) {
                    if (k == keep) continue;
                    const std::size_t idx = rem % dims[k];
                    rem /= dims[k];
                    row += idx * stride[k];
                    col += idx * stride[k];
                }
                sum += a(row, col);
            }
            r(i, j) = sum;
        }
    return DensityMatrix(std::move(r));
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng) {
    if (rank < 1 || rank > dim) throw UsageError("random_density: rank out of range");
    Cmat g(dim, rank);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < rank; ++j) g(i, j) = rng.cgaussian();
    Cmat w = g * g.adjoint();
    w *= cplx(1.0 / w.trace().real(), 0.0);
    // make Hermiticity exact
    for (std::size_t i = 0; i < dim; ++i) {
        w(i, i) = cplx(w(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cplx v = 0.5 * (w(i, j) + std::conj(w(j, i)));
            w(i, j) = v;
            w(j, i) = std::conj(v);
        }
    }
    return DensityMatrix(std::move(w));
}

Cmat random_unitary(std::size_t dim, Rng& rng) {
    if (dim < 1) throw UsageError("random_unitary: dim must be positive");
    Cmat g(dim, dim);
    for (auto& z : g.data()) z = rng.cgaussian();

    // modified Gram-Schmidt; dividing each column by a real positive norm and
    // removing the R diagonal phase gives the Haar distribution
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t p = 0; p < c; ++p) {
            cplx proj = 0.0;
            for (std::size_t i = 0; i < dim; ++i) proj += std::conj(g(i, p)) * g(i, c);
            for (std::size_t i = 0; i < dim; ++i) g(i, c) -= proj * g(i, p);
        }
        double n2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) n2 += std::norm(g(i, c));
        const double inv = 1.0 / std::sqrt(n2);
        for (std::size_t i = 0; i < dim; ++i) g(i, c) *= inv;
    }
    return g;
}

PureState random_pure(std::size_t dim, Rng& rng) {
    std::vector<cplx> a(dim);
    double n2 = 0.0;
    for (auto& z : a) {
        z = rng.cgaussian();
        n2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& z : a) z *= inv;
    return PureState(std::move(a));
}

}  // namespace qslkit
