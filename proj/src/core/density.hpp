#pragma once

#include <vector>

#include "core/matrix.hpp"
#include "core/rng.hpp"

namespace qslkit {

/// Unit-norm complex amplitude vector.
struct PureState {
    std::vector<cplx> amplitudes;

    explicit PureState(std::vector<cplx> amps);
    std::size_t dim() const { return amplitudes.size(); }
};

/// Hermitian, unit-trace, PSD matrix. Construction validates all three
/// invariants (Hermiticity 1e-12, trace 1e-12, smallest eigenvalue >= -1e-10)
/// and throws InvalidStateError on failure. Immutable afterwards.
class DensityMatrix {
  public:
    explicit DensityMatrix(Cmat m);

    std::size_t dim() const { return mat_.rows(); }
    const Cmat& mat() const { return mat_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

    static DensityMatrix maximally_mixed(std::size_t dim);
    static DensityMatrix pure(const PureState& psi);
    /// Computational basis projector |k><k|.
    static DensityMatrix basis_projector(std::size_t dim, std::size_t k);

  private:
    Cmat mat_;
};

/// Tr(a b); real for Hermitian inputs.
double hs_inner(const DensityMatrix& a, const DensityMatrix& b);

/// Tr(a^2), in [1/dim, 1].
double purity(const DensityMatrix& a);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Partial trace of a state on a tensor product with the given subsystem
/// dimensions; keeps subsystem `keep` (0-based) and traces out the rest.
DensityMatrix partial_trace(const DensityMatrix& a, const std::vector<std::size_t>& dims,
                            std::size_t keep);

/// Ginibre construction: G G^dagger / Tr(G G^dagger) with G a dim x rank
/// matrix of independent standard complex Gaussians.
DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng);

/// Haar unitary: Gram-Schmidt on a Ginibre matrix with the phase fixed so the
/// R diagonal is real positive.
Cmat random_unitary(std::size_t dim, Rng& rng);

PureState random_pure(std::size_t dim, Rng& rng);

}  // namespace qslkit
