#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "core/errors.hpp"
#include "core/qsl.hpp"
#include "core/state_io.hpp"

using namespace qslkit;

TEST_CASE("quadrature config validation") {
    QuadratureConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.n_points = 2000;  // even
    CHECK_THROWS_AS(cfg.validate(), UsageError);
    cfg.n_points = 2003;  // 2002 not divisible by 4
    cfg.refinement = 2;
    CHECK_THROWS_AS(cfg.validate(), UsageError);
    cfg = QuadratureConfig{};
    cfg.purity_guard = 0.0;
    CHECK_THROWS_AS(cfg.validate(), UsageError);
}

TEST_CASE("pure initial state collapses the integrand") {
    const ReservoirParams p{2.0, 1.0, 1.0};
    const DensityMatrix rho0 = werner_state({1.0});
    for (double t : {0.2, 0.8, 1.5}) {
        const Cmat d = rho_dot(rho0, t, p);
        const double expected = std::sqrt(trace_product(d, d).real());
        CHECK(integrand_x(rho0, evolve(rho0, t, p), d) == expected);
    }
}

TEST_CASE("golden regression for the reference configuration") {
    const auto golden = nlohmann::json::parse(read_file(std::string(FIXTURE_DIR) + "/bound_golden.json"));
    const BoundResult b = qsl_time(werner_state({0.5}), ReservoirParams{2.0, 1.0, 1.0}, 1.0,
                                   QuadratureConfig{});
    CHECK(std::abs(b.f_tau - golden["f_tau"].get<double>()) < 1e-7);
    CHECK(std::abs(b.x_tau - golden["x_tau"].get<double>()) < 1e-7);
    CHECK(std::abs(b.tau_qsl - golden["tau_qsl"].get<double>()) < 1e-7);
    CHECK(b.converged);
    CHECK(b.integrand_samples.size() == 2001);
}

TEST_CASE("refining the grid moves the value less than the error estimate") {
    const DensityMatrix rho0 = werner_state({0.5});
    const ReservoirParams p{2.0, 1.0, 1.0};
    QuadratureConfig coarse;
    coarse.n_points = 1001;
    QuadratureConfig fine;
    fine.n_points = 4001;
    const BoundResult a = qsl_time(rho0, p, 1.0, coarse);
    const BoundResult b = qsl_time(rho0, p, 1.0, fine);
    CHECK(std::abs(a.x_tau - b.x_tau) < 10.0 * a.quad_error);
}

TEST_CASE("bound never exceeds the driving time on sample points") {
    for (double r : {0.1, 0.9}) {
        for (double g0 : {0.1, 2.0, 10.0}) {
            const BoundResult b = qsl_time(werner_state({r}), ReservoirParams{g0, 1.0, 1.0}, 1.0,
                                           QuadratureConfig{});
            CHECK(b.tau_qsl <= 1.0 + 1e-6);
            CHECK(b.tau_qsl >= 0.0);
        }
    }
}

TEST_CASE("pure Werner state reduces to the overlap bound") {
    const DensityMatrix rho0 = werner_state({1.0});
    for (double g0 : {0.3, 2.0, 8.0}) {
        const ReservoirParams p{g0, 1.0, 1.0};
        const BoundResult b = qsl_time(rho0, p, 1.0, QuadratureConfig{});
        const double mt = mt_pure_bound(rho0, p, 1.0, QuadratureConfig{});
        CHECK(std::abs(b.tau_qsl - mt) < 1e-9 * std::max(1.0, std::abs(mt)));
    }
}

TEST_CASE("mt_pure_bound rejects mixed input") {
    CHECK_THROWS_AS(
        mt_pure_bound(werner_state({0.5}), ReservoirParams{1.0, 1.0, 1.0}, 1.0, QuadratureConfig{}),
        UsageError);
}

TEST_CASE("stationary state gives a zero bound") {
    const DensityMatrix ground = DensityMatrix::basis_projector(2, 1);
    const BoundResult b = qsl_time(ground, ReservoirParams{2.0, 1.0, 1.0}, 1.0, QuadratureConfig{});
    CHECK(b.tau_qsl == 0.0);
    CHECK(b.x_tau == 0.0);
    CHECK(b.f_tau == 1.0);
}

TEST_CASE("comparator bound is finite and below tau") {
    const DensityMatrix rho0 = werner_state({0.5});
    const ReservoirParams p{2.0, 1.0, 1.0};
    for (FidelityKind k : {FidelityKind::F1, FidelityKind::F2, FidelityKind::Bures}) {
        const double v = generic_fidelity_bound(k, rho0, p, 1.0, QuadratureConfig{});
        CHECK(v > 0.0);
        CHECK(v <= 1.0 + 1e-6);
    }
}
