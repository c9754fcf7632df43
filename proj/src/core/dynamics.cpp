#include "core/dynamics.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace qslkit {

namespace {

/// sinh(z)/z, series below |z| = 1e-4 where the direct quotient loses digits.
cplx sinhc(cplx z) {
    if (std::abs(z) < 1e-4) {
        const cplx z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sinh(z) / z;
}

cplx branch_d(const ReservoirParams& p) {
    return std::sqrt(cplx(p.lambda * p.lambda - 2.0 * p.gamma0 * p.lambda, 0.0));
}

void require_nonnegative_time(double t) {
    if (t < 0.0) throw UsageError("dynamics: negative time");
}

}  // namespace

void ReservoirParams::validate() const {
    if (!(gamma0 > 0.0)) throw UsageError("ReservoirParams: gamma0 must be > 0");
    if (!(lambda > 0.0)) throw UsageError("ReservoirParams: lambda must be > 0");
    if (omega0 < 0.0) throw UsageError("ReservoirParams: omega0 must be >= 0");
}

cplx g_function(double t, const ReservoirParams& p) {
    require_nonnegative_time(t);
    p.validate();
    const cplx d = branch_d(p);
    const cplx x = 0.5 * d * t;
    // (lambda/d) sinh(dt/2) written via sinhc so d -> 0 stays finite
    return std::exp(-0.5 * p.lambda * t) * (std::cosh(x) + 0.5 * p.lambda * t * sinhc(x));
}

cplx g_dot(double t, const ReservoirParams& p) {
    require_nonnegative_time(t);
    p.validate();
    const cplx d = branch_d(p);
    const cplx x = 0.5 * d * t;
    return -std::exp(-0.5 * p.lambda * t) * p.gamma0 * p.lambda * 0.5 * t * sinhc(x);
}

double memory_kernel(double dt, const ReservoirParams& p) {
    p.validate();
    return 0.5 * p.gamma0 * p.lambda * std::exp(-p.lambda * std::abs(dt));
}

std::vector<cplx> solve_g_volterra(const ReservoirParams& p, double t_max, std::size_t steps) {
    p.validate();
    if (t_max <= 0.0) throw UsageError("solve_g_volterra: t_max must be > 0");
    if (steps < 100) throw UsageError("solve_g_volterra: needs at least 100 steps");
    const double h = t_max / static_cast<double>(steps);
    if (h * p.lambda > 0.1) throw NumericError("solve_g_volterra: step too coarse for 1/lambda");

    std::vector<double> kern(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
        kern[k] = memory_kernel(static_cast<double>(k) * h, p);

    std::vector<cplx> g(steps + 1);
    g[0] = 1.0;

    // trapezoidal convolution of the kernel with g up to node k
    auto conv = [&](std::size_t k) -> cplx {
        if (k == 0) return 0.0;
        cplx s = 0.5 * (kern[k] * g[0] + kern[0] * g[k]);
        for (std::size_t j = 1; j < k; ++j) s += kern[k - j] * g[j];
        return h * s;
    };

    for (std::size_t k = 0; k < steps; ++k) {
        const cplx gd = -conv(k);
        g[k + 1] = g[k] + h * gd;            // predictor
        const cplx gd_next = -conv(k + 1);   // corrector slope at the new node
        g[k + 1] = g[k] + 0.5 * h * (gd + gd_next);
    }
    return g;
}

DensityMatrix evolve(const DensityMatrix& initial, double t, const ReservoirParams& p) {
    require_nonnegative_time(t);
    if (initial.dim() != 2) throw UsageError("evolve: qubit states only");
    const cplx g = g_function(t, p);
    const double a2 = std::norm(g);
    const double p11 = initial(0, 0).real();
    const cplx coh = initial(0, 1) * g;
    Cmat m(2, 2);
    m(0, 0) = p11 * a2;
    m(0, 1) = coh;
    m(1, 0) = std::conj(coh);
    m(1, 1) = 1.0 - p11 * a2;
    return DensityMatrix(std::move(m));
}

Cmat rho_dot(const DensityMatrix& initial, double t, const ReservoirParams& p) {
    require_nonnegative_time(t);
    if (initial.dim() != 2) throw UsageError("rho_dot: qubit states only");
    const cplx g = g_function(t, p);
    const cplx gd = g_dot(t, p);
    const double da2 = 2.0 * (std::conj(g) * gd).real();  // d|G|^2/dt
    const double p11 = initial(0, 0).real();
    const cplx dcoh = initial(0, 1) * gd;
    Cmat m(2, 2);
    m(0, 0) = p11 * da2;
    m(0, 1) = dcoh;
    m(1, 0) = std::conj(dcoh);
    m(1, 1) = -p11 * da2;
    return m;
}

double decay_rate(double t, const ReservoirParams& p) {
    const cplx g = g_function(t, p);
    if (std::abs(g) < 1e-12)
        throw NumericError("decay_rate: G(t) vanishes, rate is singular");
    return -2.0 * (g_dot(t, p) / g).real();
}

DensityMatrix werner_state(const WernerSpec& spec) {
    if (spec.r < 0.0 || spec.r > 1.0) throw UsageError("werner_state: r must lie in [0,1]");
    Cmat m(2, 2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(0, 1) = 0.5 * spec.r;
    m(1, 0) = 0.5 * spec.r;
    return DensityMatrix(std::move(m));
}

Trajectory make_trajectory(const DensityMatrix& initial, const ReservoirParams& p, double t_max,
                           std::size_t n_points) {
    if (n_points < 2) throw UsageError("make_trajectory: needs at least 2 points");
    if (t_max <= 0.0) throw UsageError("make_trajectory: t_max must be > 0");
    Trajectory traj{p, initial, {}, {}, {}};
    traj.times.reserve(n_points);
    traj.states.reserve(n_points);
    traj.derivs.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
        traj.times.push_back(t);
        traj.states.push_back(evolve(initial, t, p));
        traj.derivs.push_back(rho_dot(initial, t, p));
    }
    return traj;
}

}  // namespace qslkit
