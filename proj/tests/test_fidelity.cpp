#include <doctest.h>

#include <cmath>

#include "core/eig.hpp"
#include "core/errors.hpp"
#include "core/fidelity.hpp"
#include "core/state_io.hpp"

using namespace qslkit;

namespace {

DensityMatrix fixture(const char* name) {
    return state_from_file(std::string(FIXTURE_DIR) + "/" + name);
}

double det2(const DensityMatrix& m) {
    return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
}

}  // namespace

TEST_CASE("orthogonal block pair") {
    const DensityMatrix a = fixture("block_upper.json");
    const DensityMatrix b = fixture("block_lower.json");

    CHECK(new_fidelity(a, b) == 0.0);  // exactly, by construction of the formula
    CHECK(std::abs(f2(a, b) - 0.5) < 1e-12);
    CHECK(std::abs(f3(a, b) - 2.0 / 3.0) < 1e-12);
    CHECK(std::abs(f1(a, b)) < 1e-12);
    CHECK(std::abs(bures(a, b)) < 1e-12);
}

TEST_CASE("identical states give 1") {
    Rng rng(3);
    for (std::size_t dim : {2, 3, 4}) {
        const DensityMatrix rho = random_density(dim, dim, rng);
        for (FidelityKind k : {FidelityKind::Bures, FidelityKind::F1, FidelityKind::F2,
                               FidelityKind::F3, FidelityKind::NewF})
            CHECK(std::abs(evaluate(k, rho, rho) - 1.0) < 1e-9);
    }
}

TEST_CASE("pure states reduce to the squared overlap") {
    Rng rng(4);
    const PureState psi = random_pure(2, rng);
    const PureState phi = random_pure(2, rng);
    const DensityMatrix p = DensityMatrix::pure(psi);
    const DensityMatrix q = DensityMatrix::pure(phi);

    cplx ip = 0.0;
    for (std::size_t i = 0; i < 2; ++i) ip += std::conj(psi.amplitudes[i]) * phi.amplitudes[i];
    const double overlap = std::norm(ip);

    for (FidelityKind k : {FidelityKind::Bures, FidelityKind::F1, FidelityKind::F2,
                           FidelityKind::F3, FidelityKind::NewF})
        CHECK(std::abs(evaluate(k, p, q) - overlap) < 1e-10);
}

TEST_CASE("bures agrees with the closed qubit formula") {
    // for qubits: F = Tr(rho sigma) + 2 sqrt(det rho det sigma)
    Rng rng(6);
    for (int i = 0; i < 50; ++i) {
        const DensityMatrix rho = random_density(2, 2, rng);
        const DensityMatrix sigma = random_density(2, 2, rng);
        const double closed = hs_inner(rho, sigma) +
                              2.0 * std::sqrt(std::max(0.0, det2(rho) * det2(sigma)));
        CHECK(std::abs(bures(rho, sigma) - closed) < 1e-10);
    }
}

TEST_CASE("mixedness prefactor against a hand evaluation") {
    // rho = diag(3/4, 1/4), sigma = I/2: Tr rho^2 = 5/8, Tr sigma^2 = 1/2,
    // Tr(rho sigma) = 1/2, so F = (1 + sqrt(3/5)) / 2
    Cmat m(2, 2);
    m(0, 0) = 0.75;
    m(1, 1) = 0.25;
    const DensityMatrix rho(std::move(m));
    const DensityMatrix sigma = DensityMatrix::maximally_mixed(2);
    CHECK(std::abs(new_fidelity(rho, sigma) - 0.5 * (1.0 + std::sqrt(0.6))) < 1e-12);
}

TEST_CASE("kind names round-trip and reject junk") {
    for (FidelityKind k : {FidelityKind::Bures, FidelityKind::F1, FidelityKind::F2,
                           FidelityKind::F3, FidelityKind::NewF})
        CHECK(fidelity_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(fidelity_kind_from_string("uhlmann"), UsageError);
}

TEST_CASE("dimension mismatch is rejected") {
    const DensityMatrix a = DensityMatrix::maximally_mixed(2);
    const DensityMatrix b = DensityMatrix::maximally_mixed(3);
    CHECK_THROWS_AS(new_fidelity(a, b), UsageError);
}
