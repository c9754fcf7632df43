#pragma once

#include <utility>
#include <vector>

#include "core/dynamics.hpp"
#include "core/fidelity.hpp"

namespace qslkit {

struct QuadratureConfig {
    std::size_t n_points = 2001;  // odd, Simpson-compatible
    std::size_t refinement = 2;   // successive halvings for the error estimate
    double purity_guard = 1e-9;

    void validate() const;
};

struct BoundResult {
    double tau = 0.0;
    double f_tau = 0.0;    // target fidelity F(rho0, rho_tau)
    double x_tau = 0.0;    // time-averaged speed
    double tau_qsl = 0.0;  // |1 - f_tau| / x_tau
    double quad_error = 0.0;
    bool converged = false;
    std::vector<std::pair<double, double>> integrand_samples;
};

/// Pointwise upper bound on |dF/dt| along the trajectory, with
/// a = Tr rho0^2 and b = Tr rho_t^2:
///   term1 = sqrt((1-a)/a) sqrt(b/(1-b)) |Tr(rho_dot rho_t) Tr(rho0 rho_t)| / b^2
///   term2 = sqrt(a Tr rho_dot^2)
///   term3 = sqrt((1-b)/b) sqrt(1-a) sqrt(Tr rho_dot^2)
/// For pure rho0 (a = 1) this is exactly sqrt(Tr rho_dot^2).
double integrand_x(const DensityMatrix& rho0, const DensityMatrix& rho_t, const Cmat& rho_t_dot,
                   double guard = 1e-9);

struct Quadrature {
    double value = 0.0;
    double error = 0.0;  // conservative estimate: |fine - coarse| of the last refinement
    bool converged = false;
};

/// Composite-Simpson average of integrand_x over the trajectory.
Quadrature x_tau(const DensityMatrix& rho0, const Trajectory& traj, const QuadratureConfig& cfg);

/// QSL time bound tau_qsl = |1 - F(rho0, rho_tau)| / X_tau.
BoundResult qsl_time(const DensityMatrix& rho0, const ReservoirParams& p, double tau,
                     const QuadratureConfig& cfg);

/// Mandelstam-Tamm-type bound for pure initial states:
///   tau |1 - Tr(rho0 rho_tau)| / int_0^tau sqrt(Tr rho_dot^2) dt.
double mt_pure_bound(const DensityMatrix& rho0, const ReservoirParams& p, double tau,
                     const QuadratureConfig& cfg);

/// Comparator bound valid for any fidelity:
///   tau |F(rho0,rho0) - F(rho0,rho_tau)| / int_0^tau |dF(rho0,rho_t)/dt| dt
/// with the derivative taken by central differences on the trajectory grid.
double generic_fidelity_bound(FidelityKind kind, const DensityMatrix& rho0,
                              const ReservoirParams& p, double tau, const QuadratureConfig& cfg);

}  // namespace qslkit
