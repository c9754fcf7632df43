#pragma once

#include <vector>

#include "core/matrix.hpp"

namespace qslkit {

struct EigResult {
    std::vector<double> values;  // ascending
    Cmat vectors;                // columns; V diag(w) V^dagger reconstructs the input
};

/// Cyclic Jacobi for complex Hermitian matrices. Throws UsageError when the
/// input is not Hermitian within `herm_tol`.
EigResult eig_hermitian(const Cmat& m, double herm_tol = 1e-10);

/// Hermitian PSD square root. Eigenvalues in [-1e-10, 0) are clamped to 0;
/// anything below -1e-10 throws InvalidStateError.
Cmat sqrt_psd(const Cmat& m, double herm_tol = 1e-10);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Cmat& m, double herm_tol = 1e-10);

}  // namespace qslkit
