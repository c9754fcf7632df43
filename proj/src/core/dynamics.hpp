#pragma once

#include <vector>

#include "core/density.hpp"

namespace qslkit {

/// Lorentzian reservoir: gamma0 is the coupling strength, lambda the width.
/// omega0 is carried for configuration completeness only; the resonant
/// interaction-picture solution does not depend on it.
struct ReservoirParams {
    double gamma0 = 1.0;
    double lambda = 1.0;
    double omega0 = 1.0;

    void validate() const;
};

/// Werner-type qubit state (1-r)/2 I + r |psi><psi|, |psi> = (|1>+|0>)/sqrt2.
/// Basis convention throughout: index 0 = excited |1>, index 1 = ground |0>.
struct WernerSpec {
    double r = 1.0;
};

struct Trajectory {
    ReservoirParams params;
    DensityMatrix initial;
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    std::vector<Cmat> derivs;  // Hermitian, traceless
};

/// Closed-form amplitude damping function
///   G(t) = e^{-lambda t/2} [cosh(dt/2) + (lambda/d) sinh(dt/2)],
/// d = sqrt(lambda^2 - 2 gamma0 lambda) in complex arithmetic. The removable
/// d -> 0 singularity is handled by a sinh(x)/x series.
cplx g_function(double t, const ReservoirParams& p);

/// Analytic derivative: -e^{-lambda t/2} (gamma0 lambda / d) sinh(dt/2).
cplx g_dot(double t, const ReservoirParams& p);

/// Reservoir correlation kernel f(dt) = (gamma0 lambda / 2) e^{-lambda |dt|}.
double memory_kernel(double dt, const ReservoirParams& p);

/// Trapezoidal-convolution predictor-corrector solver for
///   dG/dt = -int_0^t f(t - t1) G(t1) dt1,  G(0) = 1.
/// Returns G on the uniform grid of `steps`+1 points over [0, t_max].
/// Independent of g_function; serves as its oracle.
std::vector<cplx> solve_g_volterra(const ReservoirParams& p, double t_max, std::size_t steps);

/// Exact reduced state at time t for a qubit initial state.
DensityMatrix evolve(const DensityMatrix& initial, double t, const ReservoirParams& p);

/// Analytic time derivative of the reduced state; Hermitian and traceless.
Cmat rho_dot(const DensityMatrix& initial, double t, const ReservoirParams& p);

/// Time-dependent decay rate gamma_t = -2 Re(Gdot/G). Throws NumericError at
/// zeros of G where the rate diverges.
double decay_rate(double t, const ReservoirParams& p);

DensityMatrix werner_state(const WernerSpec& spec);

Trajectory make_trajectory(const DensityMatrix& initial, const ReservoirParams& p, double t_max,
                           std::size_t n_points);

}  // namespace qslkit
