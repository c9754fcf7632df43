#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/dynamics.hpp"
#include "core/fidelity.hpp"
#include "core/rng.hpp"

namespace qslkit {

/// CPTP map in Stinespring form: rho -> Tr_anc[ U (rho (x) |a><a|) U^dagger ].
/// Trace preservation holds by construction for any unitary dilation.
struct ChannelSpec {
    std::size_t input_dim;
    std::size_t ancilla_dim;
    Cmat dilation_unitary;  // on input (x) ancilla
    PureState ancilla_state;

    void validate() const;
};

ChannelSpec random_channel(std::size_t input_dim, std::size_t ancilla_dim, Rng& rng);
ChannelSpec identity_channel(std::size_t input_dim);

DensityMatrix apply_channel(const ChannelSpec& c, const DensityMatrix& rho);

/// Outcome of one stochastic property search. `worst_margin` is the most
/// negative slack seen; a counterexample is attached iff
/// worst_margin < -tolerance. `hard_failure` flags a failed fixed check
/// (a pinned example, as opposed to a conjecture-class search finding).
struct ViolationReport {
    std::string property_name;
    long trials = 0;
    double tolerance = 0.0;
    double worst_margin = 0.0;
    std::uint64_t seed = 0;
    bool hard_failure = false;
    std::optional<std::string> counterexample;

    bool violated() const { return worst_margin < -tolerance; }
};

/// Jozsa axiom checks A1-A4, one report per axiom, in order. For F1 the A4
/// trial set always includes the (I/2, |0><0|) counterexample, so its A4
/// report carries a violation. A4 for F3 is only meaningful at dim 2 and is
/// skipped for larger dimensions.
std::vector<ViolationReport> check_jozsa(FidelityKind kind, long trials,
                                         const std::vector<std::size_t>& dims, std::uint64_t seed);

/// F(a(x)b, c(x)d) >= F(a,c) F(b,d), plus the scalar purity-tuple inequality
/// behind it.
ViolationReport check_supermultiplicative(long trials, const std::vector<std::size_t>& dims,
                                          std::uint64_t seed);

/// Random-channel monotonicity search (conjecture-class) plus the pinned
/// two-qubit partial-trace example, which is asserted exactly.
ViolationReport check_monotonicity(FidelityKind kind, long trials,
                                   const std::vector<std::size_t>& dims, std::uint64_t seed);

/// The pinned two-qubit partial-trace example alone.
ViolationReport check_monotonicity_fixed();

/// F(rho, p s1 + (1-p) s2) >= p F(rho,s1) + (1-p) F(rho,s2) (conjecture-class).
ViolationReport check_concavity(long trials, const std::vector<std::size_t>& dims,
                                std::uint64_t seed);

/// Finite-difference |dF/dt| <= integrand_x at sampled times along a
/// trajectory.
ViolationReport check_derivative_chain(const DensityMatrix& rho0, const ReservoirParams& p,
                                       double tau, long n_samples);

}  // namespace qslkit
