#include "core/fidelity.hpp"

#include <algorithm>
#include <cmath>

#include "core/eig.hpp"
#include "core/errors.hpp"

namespace qslkit {

namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) throw UsageError("fidelity: dimension mismatch");
}

/// (1 - Tr rho^2) clamped into [0, 1 - 1/dim]. Values below 1e-12 are
/// rounding noise on a pure state and collapse to 0; without the floor the
/// square root amplifies that noise to ~1e-8 and pollutes unitary-invariance
/// comparisons.
double mixedness(const DensityMatrix& a) {
    const double hi = 1.0 - 1.0 / static_cast<double>(a.dim());
    const double m = std::clamp(1.0 - purity(a), 0.0, hi);
    return m < 1e-12 ? 0.0 : m;
}

}  // namespace

const char* to_string(FidelityKind k) {
    switch (k) {
        case FidelityKind::Bures: return "bures";
        case FidelityKind::F1: return "f1";
        case FidelityKind::F2: return "f2";
        case FidelityKind::F3: return "f3";
        case FidelityKind::NewF: return "newf";
    }
    return "?";
}

FidelityKind fidelity_kind_from_string(const std::string& name) {
    if (name == "bures") return FidelityKind::Bures;
    if (name == "f1") return FidelityKind::F1;
    if (name == "f2") return FidelityKind::F2;
    if (name == "f3") return FidelityKind::F3;
    if (name == "newf") return FidelityKind::NewF;
    throw UsageError("unknown fidelity kind: " + name);
}

double bures(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho, sigma);
    const Cmat root = sqrt_psd(rho.mat());
    const Cmat inner = root * sigma.mat() * root;
    const EigResult e = eig_hermitian(inner, 1e-9);
    double t = 0.0;
    // zero modes of the product come out as ~1e-16 noise; the square root
    // would blow that up to ~1e-8 per mode, so anything below the noise
    // floor counts as an exact zero
    for (double w : e.values)
        if (w > 1e-13) t += std::sqrt(w);
    return t * t;
}

double f1(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho, sigma);
    return hs_inner(rho, sigma) / std::sqrt(purity(rho) * purity(sigma));
}

double f2(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho, sigma);
    return hs_inner(rho, sigma) + std::sqrt(mixedness(rho)) * std::sqrt(mixedness(sigma));
}

double f3(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho, sigma);
    if (rho.dim() < 2) throw UsageError("f3: needs dim >= 2");
    const double r = 1.0 / static_cast<double>(rho.dim() - 1);
    return 0.5 * (1.0 - r) + 0.5 * (1.0 + r) * f2(rho, sigma);
}

double new_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho, sigma);
    const double bracket =
        1.0 + std::sqrt(mixedness(rho) / purity(rho)) * std::sqrt(mixedness(sigma) / purity(sigma));
    // multiply by the inner product last: an orthogonal pair gives exactly 0
    return bracket * hs_inner(rho, sigma);
}

double evaluate(FidelityKind kind, const DensityMatrix& rho, const DensityMatrix& sigma) {
    switch (kind) {
        case FidelityKind::Bures: return bures(rho, sigma);
        case FidelityKind::F1: return f1(rho, sigma);
        case FidelityKind::F2: return f2(rho, sigma);
        case FidelityKind::F3: return f3(rho, sigma);
        case FidelityKind::NewF: return new_fidelity(rho, sigma);
    }
    throw UsageError("evaluate: bad fidelity kind");
}

}  // namespace qslkit
