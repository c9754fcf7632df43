#include <doctest.h>

#include <cmath>

#include "core/dynamics.hpp"
#include "core/errors.hpp"

using namespace qslkit;

TEST_CASE("initial conditions") {
    const ReservoirParams p{0.7, 1.3, 1.0};
    CHECK(g_function(0.0, p) == cplx(1.0, 0.0));
    CHECK(std::abs(g_dot(0.0, p)) < 1e-15);
    CHECK(std::abs(decay_rate(0.0, p)) < 1e-12);
}

TEST_CASE("closed form at a frozen reference point") {
    // weak coupling, gamma0/lambda = 0.1, t = 1
    const ReservoirParams p{0.1, 1.0, 1.0};
    CHECK(std::abs(g_function(1.0, p).real() - 0.9816771188) < 1e-9);
    CHECK(std::abs(g_function(1.0, p).imag()) < 1e-14);
    CHECK(std::abs(g_dot(1.0, p).real() - (-0.0313475745)) < 1e-9);
}

TEST_CASE("derivative matches a finite difference") {
    const double h = 1e-6;
    for (double g0 : {0.1, 0.5, 5.0, 10.0}) {
        const ReservoirParams p{g0, 1.0, 1.0};
        for (double t : {0.3, 1.0, 2.7}) {
            const cplx fd = (g_function(t + h, p) - g_function(t - h, p)) / (2.0 * h);
            CHECK(std::abs(g_dot(t, p) - fd) < 1e-7);
        }
    }
}

TEST_CASE("critical damping gamma0 = lambda/2 is smooth") {
    // d = 0 exactly; the sinhc series must take over
    const ReservoirParams p{0.5, 1.0, 1.0};
    const ReservoirParams near{0.5000001, 1.0, 1.0};
    for (double t : {0.1, 1.0, 5.0}) {
        CHECK(std::abs(g_function(t, p) - g_function(t, near)) < 1e-6);
        CHECK(std::abs(g_dot(t, p) - g_dot(t, near)) < 1e-6);
    }
    // closed form at d = 0: e^{-lambda t/2} (1 + lambda t / 2)
    const double t = 2.0;
    CHECK(std::abs(g_function(t, p).real() - std::exp(-0.5 * t) * (1.0 + 0.5 * t)) < 1e-13);
}

TEST_CASE("strong coupling zero of G") {
    // gamma0 = 5 lambda: first zero at (2/3)(pi - atan(3))
    const ReservoirParams p{5.0, 1.0, 1.0};
    const double t_star = (2.0 / 3.0) * (std::acos(-1.0) - std::atan(3.0));
    CHECK(std::abs(g_function(t_star, p)) < 1e-12);
    CHECK_THROWS_AS(decay_rate(t_star, p), NumericError);
    // the rate is finite and positive slightly away from the zero
    CHECK(decay_rate(t_star - 0.05, p) > 0.0);
}

TEST_CASE("volterra solver tracks the closed form") {
    const ReservoirParams p{0.5, 1.0, 1.0};
    const double t_max = 5.0;
    const std::size_t steps = 4000;
    const auto g = solve_g_volterra(p, t_max, steps);
    double worst = 0.0;
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = t_max * static_cast<double>(k) / static_cast<double>(steps);
        worst = std::max(worst, std::abs(g[k] - g_function(t, p)));
    }
    CHECK(worst < 1e-5);
}

TEST_CASE("volterra solver rejects coarse grids") {
    const ReservoirParams p{0.5, 1.0, 1.0};
    CHECK_THROWS_AS(solve_g_volterra(p, 1.0, 50), UsageError);
    CHECK_THROWS_AS(solve_g_volterra(ReservoirParams{0.5, 100.0, 1.0}, 10.0, 500), NumericError);
}

TEST_CASE("evolution preserves invariants and fixes the ground state") {
    const ReservoirParams p{2.0, 1.0, 1.0};
    const DensityMatrix rho0 = werner_state({0.7});
    for (double t : {0.2, 1.0, 4.0}) {
        const DensityMatrix rho_t = evolve(rho0, t, p);
        CHECK(std::abs(rho_t.mat().trace().real() - 1.0) < 1e-14);
        CHECK(rho_t.mat().is_hermitian(1e-14));
    }

    const DensityMatrix ground = DensityMatrix::basis_projector(2, 1);
    CHECK(max_abs_diff(evolve(ground, 3.0, p).mat(), ground.mat()) < 1e-15);
}

TEST_CASE("excited population decays as |G|^2") {
    const ReservoirParams p{1.5, 1.0, 1.0};
    Cmat m(2, 2);
    m(0, 0) = 0.8;
    m(1, 1) = 0.2;
    m(0, 1) = cplx(0.1, 0.05);
    m(1, 0) = cplx(0.1, -0.05);
    const DensityMatrix rho0(std::move(m));
    const double t = 1.3;
    const cplx g = g_function(t, p);
    const DensityMatrix rho_t = evolve(rho0, t, p);
    CHECK(std::abs(rho_t(0, 0).real() - 0.8 * std::norm(g)) < 1e-14);
    CHECK(std::abs(rho_t(0, 1) - cplx(0.1, 0.05) * g) < 1e-14);
}

TEST_CASE("state derivative matches finite differences") {
    const double h = 1e-6;
    const DensityMatrix rho0 = werner_state({0.5});
    for (double g0 : {0.1, 5.0}) {
        const ReservoirParams p{g0, 1.0, 1.0};
        for (double t : {0.4, 1.7}) {
            const Cmat fd = (1.0 / (2.0 * h)) * (evolve(rho0, t + h, p).mat() -
                                                 evolve(rho0, t - h, p).mat());
            CHECK(max_abs_diff(rho_dot(rho0, t, p), fd) < 1e-8);
        }
    }
}

TEST_CASE("trajectory grid is consistent") {
    const ReservoirParams p{2.0, 1.0, 1.0};
    const DensityMatrix rho0 = werner_state({0.9});
    const Trajectory traj = make_trajectory(rho0, p, 1.0, 101);
    REQUIRE(traj.times.size() == 101);
    CHECK(traj.times.front() == 0.0);
    CHECK(traj.times.back() == 1.0);
    CHECK(max_abs_diff(traj.states.front().mat(), rho0.mat()) < 1e-15);
    CHECK(max_abs_diff(traj.states[50].mat(), evolve(rho0, traj.times[50], p).mat()) < 1e-14);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((ReservoirParams{-1.0, 1.0, 1.0}.validate()), UsageError);
    CHECK_THROWS_AS((ReservoirParams{1.0, 0.0, 1.0}.validate()), UsageError);
    CHECK_THROWS_AS(werner_state({1.5}), UsageError);
}
