#include "core/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/errors.hpp"

namespace qslkit {

namespace {

double off_diagonal_norm(const Cmat& m) {
    double s = 0.0;
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

}  // namespace

EigResult eig_hermitian(const Cmat& m, double herm_tol) {
    if (!m.square()) throw UsageError("eig_hermitian: matrix not square");
    if (!m.is_hermitian(herm_tol)) throw UsageError("eig_hermitian: matrix not Hermitian");

    const std::size_t n = m.rows();
    // work on the exactly-Hermitian part
    Cmat a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = cplx(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    Cmat v = Cmat::identity(n);

    const double scale = std::max(a.max_abs(), 1e-300);
    const double stop = 1e-15 * scale;
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a) > stop; ++sweep) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                if (std::abs(apq) <= stop * 1e-2) continue;

                // 2x2 Hermitian block [[app, apq], [conj(apq), aqq]]; the
                // unitary U has the block's eigenvectors as columns:
                //   u+ = (2 apq, w) / N   for the larger eigenvalue,
                //   u- = (-w, 2 conj(apq)) / N
                // with w = (aqq - app) + sqrt((aqq - app)^2 + 4 |apq|^2).
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double diff = aqq - app;
                // pair the block eigenvectors so U -> identity as apq -> 0;
                // otherwise the rotation degenerates to a swap and the sweep
                // stalls instead of converging quadratically
                cplx u00, u01, u10, u11;
                const double disc = std::sqrt(diff * diff + 4.0 * std::norm(apq));
                if (diff >= 0.0) {
                    const double w = diff + disc;
                    const double nrm = std::sqrt(w * w + 4.0 * std::norm(apq));
                    u00 = cplx(-w / nrm, 0.0);
                    u10 = 2.0 * std::conj(apq) / nrm;
                    u01 = 2.0 * apq / nrm;
                    u11 = cplx(w / nrm, 0.0);
                } else {
                    // diff + disc cancels here; the conjugate form is exact
                    const double w = 4.0 * std::norm(apq) / (disc - diff);
                    const double nrm = std::sqrt(w * w + 4.0 * std::norm(apq));
                    u00 = 2.0 * apq / nrm;
                    u10 = cplx(w / nrm, 0.0);
                    u01 = cplx(-w / nrm, 0.0);
                    u11 = 2.0 * std::conj(apq) / nrm;
                }

                // a <- U^dagger a U, v <- v U
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * u00 + akq * u10;
                    a(k, q) = akp * u01 + akq * u11;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
                    a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * u00 + vkq * u10;
                    v(k, q) = vkp * u01 + vkq * u11;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigResult res;
    res.values.resize(n);
    res.vectors = Cmat(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        res.values[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) res.vectors(r, c) = v(r, order[c]);
    }
    return res;
}

Cmat sqrt_psd(const Cmat& m, double herm_tol) {
    const EigResult e = eig_hermitian(m, herm_tol);
    const std::size_t n = m.rows();
    for (double w : e.values)
        if (w < -1e-10) throw InvalidStateError("sqrt_psd: eigenvalue below -1e-10");

    Cmat r(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const double s = std::sqrt(std::max(e.values[c], 0.0));
        if (s == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vi = s * e.vectors(i, c);
            for (std::size_t j = 0; j < n; ++j) r(i, j) += vi * std::conj(e.vectors(j, c));
        }
    }
    // symmetrize away rounding
    for (std::size_t i = 0; i < n; ++i) {
        r(i, i) = cplx(r(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (r(i, j) + std::conj(r(j, i)));
            r(i, j) = v;
            r(j, i) = std::conj(v);
        }
    }
    return r;
}

double min_eigenvalue(const Cmat& m, double herm_tol) {
    const EigResult e = eig_hermitian(m, herm_tol);
    return e.values.front();
}

}  // namespace qslkit
