#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qslkit {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Sized for dimensions up to ~8; nothing
/// here tries to be clever about cache or sparsity.
class Cmat {
  public:
    Cmat() = default;
    Cmat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Cmat identity(std::size_t n);
    static Cmat zero(std::size_t rows, std::size_t cols) { return Cmat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    Cmat adjoint() const;
    cplx trace() const;
    double max_abs() const;
    bool is_hermitian(double tol) const;

    Cmat& operator+=(const Cmat& o);
    Cmat& operator-=(const Cmat& o);
    Cmat& operator*=(cplx z);

    friend Cmat operator+(Cmat a, const Cmat& b) { return a += b; }
    friend Cmat operator-(Cmat a, const Cmat& b) { return a -= b; }
    friend Cmat operator*(cplx z, Cmat a) { return a *= z; }
    friend Cmat operator*(const Cmat& a, const Cmat& b);
    friend bool operator==(const Cmat& a, const Cmat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

/// Tr(a b) without forming the product.
cplx trace_product(const Cmat& a, const Cmat& b);

/// Kronecker product.
Cmat kron(const Cmat& a, const Cmat& b);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Cmat& a, const Cmat& b);

}  // namespace qslkit
