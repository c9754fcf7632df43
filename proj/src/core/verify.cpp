#include "core/verify.hpp"

#include <cmath>
#include <sstream>

#include "core/errors.hpp"
#include "core/qsl.hpp"

namespace qslkit {

namespace {

std::string describe_matrix(const Cmat& m) {
    std::ostringstream os;
    os.precision(12);
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m(i, j).real() << (m(i, j).imag() < 0 ? "-" : "+")
               << std::abs(m(i, j).imag()) << "i";
        }
    }
    os << "]";
    return os.str();
}

/// Tracks the worst slack and remembers a description of the first state
/// tuple that crossed the violation threshold.
class WorstTracker {
  public:
    explicit WorstTracker(double tolerance) : tol_(tolerance) {}

    template <typename DescribeFn>
    void observe(double slack, DescribeFn&& describe) {
        if (slack < worst_) {
            worst_ = slack;
            if (slack < -tol_) counterexample_ = describe();
        }
    }

    void finish(ViolationReport& r) const {
        r.worst_margin = worst_;
        r.tolerance = tol_;
        if (worst_ < -tol_) r.counterexample = counterexample_;
    }

  private:
    double tol_;
    double worst_ = 0.0;
    std::string counterexample_;
};

DensityMatrix sample_state(std::size_t dim, Rng& rng) {
    const std::size_t rank = 1 + rng.next_u64() % dim;
    return random_density(dim, rank, rng);
}

DensityMatrix mix(double p, const DensityMatrix& a, const DensityMatrix& b) {
    Cmat m = a.mat();
    m *= cplx(p, 0.0);
    Cmat n = b.mat();
    n *= cplx(1.0 - p, 0.0);
    m += n;
    return DensityMatrix(std::move(m));
}

/// The orthogonal two-qubit pair: diag(1,1,0,0)/2 and diag(0,0,1,1)/2.
std::pair<DensityMatrix, DensityMatrix> block_pair() {
    Cmat a(4, 4), b(4, 4);
    a(0, 0) = a(1, 1) = 0.5;
    b(2, 2) = b(3, 3) = 0.5;
    return {DensityMatrix(std::move(a)), DensityMatrix(std::move(b))};
}

}  // namespace

void ChannelSpec::validate() const {
    const std::size_t n = input_dim * ancilla_dim;
    if (dilation_unitary.rows() != n || dilation_unitary.cols() != n)
        throw UsageError("ChannelSpec: dilation size mismatch");
    if (ancilla_state.dim() != ancilla_dim) throw UsageError("ChannelSpec: ancilla state dim mismatch");
    const Cmat uu = dilation_unitary * dilation_unitary.adjoint();
    if (max_abs_diff(uu, Cmat::identity(n)) > 1e-10)
        throw UsageError("ChannelSpec: dilation is not unitary");
}

ChannelSpec random_channel(std::size_t input_dim, std::size_t ancilla_dim, Rng& rng) {
    std::vector<cplx> anc(ancilla_dim, 0.0);
    anc[0] = 1.0;
    ChannelSpec c{input_dim, ancilla_dim, random_unitary(input_dim * ancilla_dim, rng),
                  PureState(std::move(anc))};
    c.validate();
    return c;
}

ChannelSpec identity_channel(std::size_t input_dim) {
    std::vector<cplx> anc(1, 1.0);
    return ChannelSpec{input_dim, 1, Cmat::identity(input_dim), PureState(std::move(anc))};
}

DensityMatrix apply_channel(const ChannelSpec& c, const DensityMatrix& rho) {
    if (rho.dim() != c.input_dim) throw UsageError("apply_channel: dimension mismatch");
    const DensityMatrix anc = DensityMatrix::pure(c.ancilla_state);
    const Cmat big =
        c.dilation_unitary * kron(rho.mat(), anc.mat()) * c.dilation_unitary.adjoint();
    // trace out the ancilla (subsystem 1)
    Cmat out(c.input_dim, c.input_dim);
    for (std::size_t i = 0; i < c.input_dim; ++i)
        for (std::size_t j = 0; j < c.input_dim; ++j) {
            cplx s = 0.0;
            for (std::size_t e = 0; e < c.ancilla_dim; ++e)
                s += big(i * c.ancilla_dim + e, j * c.ancilla_dim + e);
            out(i, j) = s;
        }
    // symmetrize rounding noise before validation
    for (std::size_t i = 0; i < c.input_dim; ++i) {
        out(i, i) = cplx(out(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < c.input_dim; ++j) {
            const cplx v = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    const double tr = out.trace().real();
    if (std::abs(tr - 1.0) > 1e-12) {
        out *= cplx(1.0 / tr, 0.0);
        if (std::abs(tr - 1.0) > 1e-10)
            throw NumericError("apply_channel: trace drifted beyond tolerance");
    }
    return DensityMatrix(std::move(out));
}

std::vector<ViolationReport> check_jozsa(FidelityKind kind, long trials,
                                         const std::vector<std::size_t>& dims,
                                         std::uint64_t seed) {
    if (trials < 1) throw UsageError("check_jozsa: trials must be >= 1");
    if (dims.empty()) throw UsageError("check_jozsa: no dimensions given");

    const double tol = 1e-9;
    WorstTracker a1(tol), a2(tol), a3(tol), a4(tol);
    Rng rng(seed);

    // the pinned A4 counterexample for F1: f1(I/2, |0><0|) = 1/sqrt2 != 1/2
    if (kind == FidelityKind::F1) {
        const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
        const DensityMatrix proj = DensityMatrix::basis_projector(2, 0);
        const double v = f1(rho, proj);
        a4.observe(-std::abs(v - 0.5), [&] {
            std::ostringstream os;
            os << "rho = I/2, sigma = |0><0|: F1 = " << v << ", <psi|rho|psi> = 0.5";
            return os.str();
        });
    }

    for (std::size_t dim : dims) {
        for (long t = 0; t < trials; ++t) {
            const DensityMatrix rho = sample_state(dim, rng);
            const DensityMatrix sigma = sample_state(dim, rng);
            auto describe = [&] {
                return "rho = " + describe_matrix(rho.mat()) +
                       ", sigma = " + describe_matrix(sigma.mat());
            };

            // A1: range, identity, and "1 only at equality"
            const double v = evaluate(kind, rho, sigma);
            a1.observe(v + 1e-12, describe);
            a1.observe(1.0 + 1e-12 - v, describe);
            const double self = evaluate(kind, rho, rho);
            a1.observe(-std::abs(self - 1.0), describe);
            if (kind != FidelityKind::F1 && std::abs(v - 1.0) < 1e-10 &&
                max_abs_diff(rho.mat(), sigma.mat()) > 1e-10)
                a1.observe(-1.0, describe);

            // A2: symmetry
            a2.observe(-std::abs(v - evaluate(kind, sigma, rho)), describe);

            // A3: unitary invariance
            const Cmat u = random_unitary(dim, rng);
            const DensityMatrix urho(u * rho.mat() * u.adjoint());
            const DensityMatrix usigma(u * sigma.mat() * u.adjoint());
            a3.observe(-std::abs(evaluate(kind, urho, usigma) - v), describe);

            // A4: reduction for a pure second argument (skipped for F3 above
            // dim 2, where its affine rescaling moves the pure-state value)
            if (kind != FidelityKind::F3 || dim == 2) {
                const PureState psi = random_pure(dim, rng);
                const DensityMatrix proj = DensityMatrix::pure(psi);
                cplx overlap = 0.0;
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        overlap += std::conj(psi.amplitudes[i]) * rho(i, j) * psi.amplitudes[j];
                a4.observe(-std::abs(evaluate(kind, rho, proj) - overlap.real()), [&] {
                    return "rho = " + describe_matrix(rho.mat()) +
                           ", psi-projector = " + describe_matrix(proj.mat());
                });
            }
        }
    }

    std::vector<ViolationReport> reports(4);
    const char* names[4] = {"jozsa-a1", "jozsa-a2", "jozsa-a3", "jozsa-a4"};
    const WorstTracker* trackers[4] = {&a1, &a2, &a3, &a4};
    for (int i = 0; i < 4; ++i) {
        reports[i].property_name = std::string(names[i]) + "-" + to_string(kind);
        reports[i].trials = trials * static_cast<long>(dims.size());
        reports[i].seed = seed;
        trackers[i]->finish(reports[i]);
    }
    return reports;
}

ViolationReport check_supermultiplicative(long trials, const std::vector<std::size_t>& dims,
                                          std::uint64_t seed) {
    if (trials < 1) throw UsageError("check_supermultiplicative: trials must be >= 1");
    const double tol = 1e-10;
    WorstTracker worst(tol);
    Rng rng(seed);

    for (long t = 0; t < trials; ++t) {
        const std::size_t d1 = dims[static_cast<std::size_t>(t) % dims.size()];
        const std::size_t d2 = dims[(static_cast<std::size_t>(t) + 1) % dims.size()];
        const DensityMatrix r1 = sample_state(d1, rng), s1 = sample_state(d1, rng);
        const DensityMatrix r2 = sample_state(d2, rng), s2 = sample_state(d2, rng);
        auto describe = [&] {
            return "rho1 = " + describe_matrix(r1.mat()) + ", sigma1 = " + describe_matrix(s1.mat()) +
                   ", rho2 = " + describe_matrix(r2.mat()) + ", sigma2 = " + describe_matrix(s2.mat());
        };

        const double joint = new_fidelity(tensor(r1, r2), tensor(s1, s2));
        const double split = new_fidelity(r1, s1) * new_fidelity(r2, s2);
        worst.observe(joint - split, describe);

        // the scalar inequality on the mixedness tuple that proves the bound,
        // evaluated with the same purity floor the fidelity itself uses
        auto mixed = [](const DensityMatrix& m) {
            const double v = std::max(0.0, 1.0 - purity(m));
            return v < 1e-12 ? 0.0 : v;
        };
        const double m1 = mixed(r1), m2 = mixed(r2), n1 = mixed(s1), n2 = mixed(s2);
        const double lhs = std::sqrt((m1 + m2 - m1 * m2) * (n1 + n2 - n1 * n2));
        const double rhs = std::sqrt(m1 * n1 * (1.0 - m2) * (1.0 - n2)) +
                           std::sqrt(m2 * n2 * (1.0 - m1) * (1.0 - n1)) +
                           std::sqrt(m1 * n1 * m2 * n2);
        worst.observe(lhs - rhs, describe);
    }

    ViolationReport r;
    r.property_name = "supermultiplicative";
    r.trials = trials;
    r.seed = seed;
    worst.finish(r);
    return r;
}

ViolationReport check_monotonicity_fixed() {
    ViolationReport r;
    r.property_name = "monotonicity-fixed";
    r.trials = 1;
    r.tolerance = 0.0;

    const auto [varrho, varsigma] = block_pair();
    const std::vector<std::size_t> qubits{2, 2};
    const double before = new_fidelity(varrho, varsigma);
    const double keep_second =
        new_fidelity(partial_trace(varrho, qubits, 1), partial_trace(varsigma, qubits, 1));
    const double keep_first =
        new_fidelity(partial_trace(varrho, qubits, 0), partial_trace(varsigma, qubits, 0));

    // pinned exactly: tracing qubit 1 leaves (I/2, I/2), tracing qubit 2
    // leaves (|0><0|, |1><1|)
    if (before != 0.0 || keep_second != 1.0 || keep_first != 0.0) {
        r.hard_failure = true;
        r.worst_margin = -1.0;
        std::ostringstream os;
        os << "expected (0, 1, 0), got (" << before << ", " << keep_second << ", " << keep_first << ")";
        r.counterexample = os.str();
        r.tolerance = 1e-300;  // keep the iff-invariant: violation <=> counterexample
    }
    return r;
}

ViolationReport check_monotonicity(FidelityKind kind, long trials,
                                   const std::vector<std::size_t>& dims, std::uint64_t seed) {
    if (trials < 1) throw UsageError("check_monotonicity: trials must be >= 1");
    const double tol = 1e-9;
    WorstTracker worst(tol);
    Rng rng(seed);

    for (long t = 0; t < trials; ++t) {
        const std::size_t dim = dims[static_cast<std::size_t>(t) % dims.size()];
        const std::size_t anc = 2 + (rng.next_u64() & 1);  // ancilla dim 2 or 3
        const ChannelSpec chan = random_channel(dim, anc, rng);
        const DensityMatrix rho = sample_state(dim, rng);
        const DensityMatrix sigma = sample_state(dim, rng);
        const double before = evaluate(kind, rho, sigma);
        const double after = evaluate(kind, apply_channel(chan, rho), apply_channel(chan, sigma));
        worst.observe(after - before, [&] {
            return "rho = " + describe_matrix(rho.mat()) + ", sigma = " + describe_matrix(sigma.mat()) +
                   ", dilation = " + describe_matrix(chan.dilation_unitary);
        });
    }

    ViolationReport r;
    r.property_name = std::string("monotonicity-") + to_string(kind);
    r.trials = trials;
    r.seed = seed;
    worst.finish(r);
    if (kind == FidelityKind::NewF) {
        const ViolationReport fixed = check_monotonicity_fixed();
        r.hard_failure = fixed.hard_failure;
    }
    return r;
}

ViolationReport check_concavity(long trials, const std::vector<std::size_t>& dims,
                                std::uint64_t seed) {
    if (trials < 1) throw UsageError("check_concavity: trials must be >= 1");
    const double tol = 1e-9;
    WorstTracker worst(tol);
    Rng rng(seed);

    for (long t = 0; t < trials; ++t) {
        const std::size_t dim = dims[static_cast<std::size_t>(t) % dims.size()];
        const DensityMatrix rho = sample_state(dim, rng);
        const DensityMatrix s1 = sample_state(dim, rng);
        const DensityMatrix s2 = sample_state(dim, rng);
        const double p = rng.uniform();
        const double lhs = new_fidelity(rho, mix(p, s1, s2));
        const double rhs = p * new_fidelity(rho, s1) + (1.0 - p) * new_fidelity(rho, s2);
        worst.observe(lhs - rhs, [&] {
            std::ostringstream os;
            os << "p = " << p << ", rho = " << describe_matrix(rho.mat())
               << ", sigma1 = " << describe_matrix(s1.mat())
               << ", sigma2 = " << describe_matrix(s2.mat());
            return os.str();
        });
    }

    ViolationReport r;
    r.property_name = "concavity";
    r.trials = trials;
    r.seed = seed;
    worst.finish(r);
    return r;
}

ViolationReport check_derivative_chain(const DensityMatrix& rho0, const ReservoirParams& p,
                                       double tau, long n_samples) {
    if (!(tau > 0.0)) throw UsageError("check_derivative_chain: tau must be > 0");
    if (n_samples < 1) throw UsageError("check_derivative_chain: n_samples must be >= 1");
    const double tol = 1e-7;
    WorstTracker worst(tol);
    const double h = 1e-5;

    for (long i = 1; i <= n_samples; ++i) {
        const double t = tau * static_cast<double>(i) / static_cast<double>(n_samples);
        const double fd = (new_fidelity(rho0, evolve(rho0, t + h, p)) -
                           new_fidelity(rho0, evolve(rho0, t - h, p))) /
                          (2.0 * h);
        const double bound = integrand_x(rho0, evolve(rho0, t, p), rho_dot(rho0, t, p));
        worst.observe(bound - std::abs(fd), [&] {
            std::ostringstream os;
            os << "t = " << t << ": |dF/dt| = " << std::abs(fd) << " vs integrand " << bound;
            return os.str();
        });
    }

    ViolationReport r;
    r.property_name = "derivative-chain";
    r.trials = n_samples;
    r.seed = 0;
    worst.finish(r);
    return r;
}

}  // namespace qslkit
