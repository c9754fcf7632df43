#include <doctest.h>

#include "core/density.hpp"
#include "core/eig.hpp"
#include "core/errors.hpp"

using namespace qslkit;

TEST_CASE("construction rejects bad matrices") {
    SUBCASE("non-hermitian") {
        Cmat m(2, 2);
        m(0, 0) = 0.5;
        m(1, 1) = 0.5;
        m(0, 1) = cplx(0.1, 0.2);
        m(1, 0) = cplx(0.1, 0.2);  // should be the conjugate
        CHECK_THROWS_AS(DensityMatrix(std::move(m)), InvalidStateError);
    }
    SUBCASE("wrong trace") {
        Cmat m(2, 2);
        m(0, 0) = 0.6;
        m(1, 1) = 0.6;
        CHECK_THROWS_AS(DensityMatrix(std::move(m)), InvalidStateError);
    }
    SUBCASE("negative eigenvalue") {
        Cmat m(2, 2);
        m(0, 0) = 1.2;
        m(1, 1) = -0.2;
        CHECK_THROWS_AS(DensityMatrix(std::move(m)), InvalidStateError);
    }
}

TEST_CASE("partial trace undoes tensor") {
    Rng rng(7);
    const DensityMatrix a = random_density(2, 2, rng);
    const DensityMatrix b = random_density(3, 1, rng);
    const DensityMatrix ab = tensor(a, b);
    CHECK(max_abs_diff(partial_trace(ab, {2, 3}, 0).mat(), a.mat()) < 1e-12);
    CHECK(max_abs_diff(partial_trace(ab, {2, 3}, 1).mat(), b.mat()) < 1e-12);
}

TEST_CASE("partial trace contracts purity toward mixedness") {
    Rng rng(8);
    const DensityMatrix joint = random_density(4, 1, rng);  // pure two-qubit state
    const DensityMatrix red = partial_trace(joint, {2, 2}, 0);
    CHECK(purity(red) <= 1.0 + 1e-12);
    CHECK(purity(red) >= 0.5 - 1e-12);
}

TEST_CASE("random densities are valid and reproducible") {
    Rng rng(42);
    for (std::size_t dim : {2, 3, 4}) {
        const DensityMatrix rho = random_density(dim, dim, rng);
        CHECK(std::abs(rho.mat().trace().real() - 1.0) < 1e-12);
        CHECK(min_eigenvalue(rho.mat()) > -1e-12);
        CHECK(purity(rho) <= 1.0 + 1e-12);
        CHECK(purity(rho) >= 1.0 / static_cast<double>(dim) - 1e-12);
    }

    Rng r1(99), r2(99);
    CHECK(random_density(3, 2, r1).mat() == random_density(3, 2, r2).mat());
}

TEST_CASE("qubit Hilbert-Schmidt mean purity") {
    // E[Tr rho^2] = 2d/(d^2+1) for the square Ginibre ensemble; 0.8 at d=2
    Rng rng(5);
    double acc = 0.0;
    const int n = 4000;
    for (int i = 0; i < n; ++i) acc += purity(random_density(2, 2, rng));
    CHECK(std::abs(acc / n - 0.8) < 0.01);
}

TEST_CASE("haar unitaries are unitary") {
    Rng rng(11);
    for (std::size_t dim : {2, 4, 6}) {
        const Cmat u = random_unitary(dim, rng);
        CHECK(max_abs_diff(u * u.adjoint(), Cmat::identity(dim)) < 1e-12);
    }
}

TEST_CASE("eigendecomposition reconstructs and sqrt squares back") {
    Rng rng(13);
    const DensityMatrix rho = random_density(4, 3, rng);

    const EigResult e = eig_hermitian(rho.mat());
    Cmat recon(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < 4; ++k)
                s += e.vectors(i, k) * e.values[k] * std::conj(e.vectors(j, k));
            recon(i, j) = s;
        }
    CHECK(max_abs_diff(recon, rho.mat()) < 1e-12);
    for (std::size_t k = 1; k < e.values.size(); ++k) CHECK(e.values[k - 1] <= e.values[k]);

    const Cmat root = sqrt_psd(rho.mat());
    CHECK(max_abs_diff(root * root, rho.mat()) < 1e-11);
}

TEST_CASE("sqrt_psd rejects indefinite input") {
    Cmat m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -0.5;
    CHECK_THROWS_AS(sqrt_psd(m), InvalidStateError);
}

TEST_CASE("pure state normalization is enforced") {
    CHECK_THROWS_AS(PureState({cplx(1.0, 0.0), cplx(0.5, 0.0)}), InvalidStateError);
}
