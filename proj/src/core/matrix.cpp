#include "core/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace qslkit {

Cmat Cmat::identity(std::size_t n) {
    Cmat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Cmat Cmat::adjoint() const {
    Cmat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cplx Cmat::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double Cmat::max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool Cmat::is_hermitian(double tol) const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

Cmat& Cmat::operator+=(const Cmat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch in +");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Cmat& Cmat::operator-=(const Cmat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch in -");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Cmat& Cmat::operator*=(cplx z) {
    for (auto& v : a_) v *= z;
    return *this;
}

Cmat operator*(const Cmat& a, const Cmat& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix shape mismatch in *");
    Cmat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cplx aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

cplx trace_product(const Cmat& a, const Cmat& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw UsageError("matrix shape mismatch in trace_product");
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
    return t;
}

Cmat kron(const Cmat& a, const Cmat& b) {
    Cmat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

double max_abs_diff(const Cmat& a, const Cmat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("matrix shape mismatch in max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

}  // namespace qslkit
