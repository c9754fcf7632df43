#pragma once

#include <string>

#include "core/density.hpp"

namespace qslkit {

enum class FidelityKind { Bures, F1, F2, F3, NewF };

const char* to_string(FidelityKind k);
FidelityKind fidelity_kind_from_string(const std::string& name);

/// (Tr sqrt(rho^{1/2} sigma rho^{1/2}))^2
double bures(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr(rho sigma) / sqrt(Tr rho^2 Tr sigma^2)
double f1(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr(rho sigma) + sqrt(1 - Tr rho^2) sqrt(1 - Tr sigma^2)
double f2(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (1-r)/2 + (1+r)/2 * f2, r = 1/(dim-1)
double f3(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (1 + sqrt((1-Tr rho^2)/Tr rho^2) sqrt((1-Tr sigma^2)/Tr sigma^2)) Tr(rho sigma).
/// Exactly 0 whenever Tr(rho sigma) = 0.
double new_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

double evaluate(FidelityKind kind, const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qslkit
