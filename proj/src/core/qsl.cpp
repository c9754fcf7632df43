#include "core/qsl.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace qslkit {

namespace {

// below this the computed 1 - Tr rho_t^2 is pure rounding noise
constexpr double kPurityFloor = 1e-15;

double simpson(const std::vector<double>& v, double h) {
    double s = v.front() + v.back();
    for (std::size_t i = 1; i + 1 < v.size(); ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * v[i];
    return s * h / 3.0;
}

/// Simpson after decimating to every `stride`-th sample.
double simpson_strided(const std::vector<double>& v, double h, std::size_t stride) {
    std::vector<double> sub;
    sub.reserve((v.size() - 1) / stride + 1);
    for (std::size_t i = 0; i < v.size(); i += stride) sub.push_back(v[i]);
    return simpson(sub, h * static_cast<double>(stride));
}

Quadrature integrate_with_estimate(const std::vector<double>& v, double h,
                                   std::size_t refinement) {
    Quadrature q;
    q.value = simpson(v, h);
    const double coarse = simpson_strided(v, h, std::size_t{1} << refinement);
    const double fine_minus_one =
        refinement > 1 ? simpson_strided(v, h, std::size_t{1} << (refinement - 1)) : q.value;
    q.error = std::abs(fine_minus_one - coarse);
    q.converged = q.error <= std::max(1e-6, 1e-6 * std::abs(q.value));
    return q;
}

double trace_sq(const Cmat& m) { return trace_product(m, m).real(); }

}  // namespace

void QuadratureConfig::validate() const {
    if (n_points < 3 || n_points % 2 == 0) throw UsageError("QuadratureConfig: n_points must be odd and >= 3");
    if (refinement < 1) throw UsageError("QuadratureConfig: refinement must be >= 1");
    if ((n_points - 1) % (std::size_t{1} << refinement) != 0)
        throw UsageError("QuadratureConfig: n_points - 1 must be divisible by 2^refinement");
    if (!(purity_guard > 0.0)) throw UsageError("QuadratureConfig: purity_guard must be > 0");
}

double integrand_x(const DensityMatrix& rho0, const DensityMatrix& rho_t, const Cmat& rho_t_dot,
                   double guard) {
    if (rho0.dim() != rho_t.dim() || rho_t_dot.rows() != rho_t.dim() || !rho_t_dot.square())
        throw UsageError("integrand_x: dimension mismatch");

    const double a = std::min(purity(rho0), 1.0);
    const double one_a = std::max(0.0, 1.0 - a);
    const double tr2 = std::max(0.0, trace_sq(rho_t_dot));
    const double term2 = std::sqrt(a * tr2);
    if (one_a == 0.0) return term2;  // pure initial state: exactly sqrt(Tr rho_dot^2)

    const double b = std::min(purity(rho_t), 1.0);
    const double one_b = std::max(0.0, 1.0 - b);
    const double deriv_overlap = trace_product(rho_t_dot, rho_t.mat()).real();  // = (1/2) d(Tr rho_t^2)/dt

    if (one_b < kPurityFloor) {
        // rho_t touches purity 1; Tr(rho_dot rho_t) vanishes at the extremum,
        // so both singular terms have finite (here: zero-measure) limits
        if (std::abs(deriv_overlap) > guard)
            throw NumericError("integrand_x: purity singularity with nonvanishing Tr(rho_dot rho_t)");
        return term2;
    }

    const double term1 = std::sqrt(one_a / a) * std::sqrt(b / one_b) *
                         std::abs(deriv_overlap * hs_inner(rho0, rho_t)) / (b * b);
    const double term3 = std::sqrt(one_b / b) * std::sqrt(one_a) * std::sqrt(tr2);
    return term1 + term2 + term3;
}

Quadrature x_tau(const DensityMatrix& rho0, const Trajectory& traj, const QuadratureConfig& cfg) {
    cfg.validate();
    if (traj.times.size() != cfg.n_points)
        throw UsageError("x_tau: trajectory sampling does not match the quadrature grid");
    if (max_abs_diff(traj.states.front().mat(), rho0.mat()) > 1e-12)
        throw UsageError("x_tau: trajectory does not start at rho0");

    std::vector<double> vals(cfg.n_points);
    for (std::size_t i = 0; i < cfg.n_points; ++i)
        vals[i] = integrand_x(rho0, traj.states[i], traj.derivs[i], cfg.purity_guard);

    const double tau = traj.times.back();
    const double h = tau / static_cast<double>(cfg.n_points - 1);
    Quadrature q = integrate_with_estimate(vals, h, cfg.refinement);
    q.value /= tau;
    q.error /= tau;
    return q;
}

BoundResult qsl_time(const DensityMatrix& rho0, const ReservoirParams& p, double tau,
                     const QuadratureConfig& cfg) {
    if (!(tau > 0.0)) throw UsageError("qsl_time: tau must be > 0");
    cfg.validate();

    const Trajectory traj = make_trajectory(rho0, p, tau, cfg.n_points);
    const Quadrature q = x_tau(rho0, traj, cfg);

    BoundResult res;
    res.tau = tau;
    res.f_tau = new_fidelity(rho0, traj.states.back());
    res.x_tau = q.value;
    res.quad_error = q.error;
    res.converged = q.converged;
    res.integrand_samples.reserve(cfg.n_points);
    for (std::size_t i = 0; i < cfg.n_points; ++i)
        res.integrand_samples.emplace_back(traj.times[i],
                                           integrand_x(rho0, traj.states[i], traj.derivs[i],
                                                       cfg.purity_guard));

    const double gap = std::abs(1.0 - res.f_tau);
    if (q.value <= 0.0) {
        if (gap > 1e-12)
            throw NumericError("qsl_time: X_tau vanished while the target fidelity is below 1");
        res.tau_qsl = 0.0;  // frozen dynamics
    } else {
        res.tau_qsl = gap / q.value;
    }
    return res;
}

double mt_pure_bound(const DensityMatrix& rho0, const ReservoirParams& p, double tau,
                     const QuadratureConfig& cfg) {
    if (purity(rho0) < 1.0 - 1e-10) throw UsageError("mt_pure_bound: initial state is not pure");
    if (!(tau > 0.0)) throw UsageError("mt_pure_bound: tau must be > 0");
    cfg.validate();

    const Trajectory traj = make_trajectory(rho0, p, tau, cfg.n_points);
    std::vector<double> vals(cfg.n_points);
    for (std::size_t i = 0; i < cfg.n_points; ++i)
        vals[i] = std::sqrt(std::max(0.0, trace_product(traj.derivs[i], traj.derivs[i]).real()));
    const double h = tau / static_cast<double>(cfg.n_points - 1);
    const double denom = simpson(vals, h);
    const double gap = std::abs(1.0 - hs_inner(rho0, traj.states.back()));
    if (denom <= 0.0) {
        if (gap > 1e-12) throw NumericError("mt_pure_bound: zero denominator with moving target");
        return 0.0;
    }
    return tau * gap / denom;
}

double generic_fidelity_bound(FidelityKind kind, const DensityMatrix& rho0,
                              const ReservoirParams& p, double tau, const QuadratureConfig& cfg) {
    if (!(tau > 0.0)) throw UsageError("generic_fidelity_bound: tau must be > 0");
    cfg.validate();

    const Trajectory traj = make_trajectory(rho0, p, tau, cfg.n_points);
    const std::size_t n = cfg.n_points;
    const double h = tau / static_cast<double>(n - 1);

    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = evaluate(kind, rho0, traj.states[i]);

    std::vector<double> speed(n);
    speed[0] = std::abs(f[1] - f[0]) / h;
    speed[n - 1] = std::abs(f[n - 1] - f[n - 2]) / h;
    for (std::size_t i = 1; i + 1 < n; ++i) speed[i] = std::abs(f[i + 1] - f[i - 1]) / (2.0 * h);

    const double denom = simpson(speed, h);
    const double gap = std::abs(evaluate(kind, rho0, rho0) - f.back());
    if (denom <= 0.0) {
        if (gap > 1e-12) throw NumericError("generic_fidelity_bound: zero denominator with moving target");
        return 0.0;
    }
    return tau * gap / denom;
}

}  // namespace qslkit
