#pragma once

#include <string>
#include <vector>

#include "core/qsl.hpp"

namespace qslkit {

struct SweepConfig {
    double lambda = 1.0;
    double omega0 = 1.0;
    double tau = 1.0;
    std::vector<double> gamma0_grid;
    std::vector<double> r_values;
    QuadratureConfig quadrature;
    std::string output_path;  // optional; CLI writes here when set

    void validate() const;

    /// Figure-style defaults: 60 log-spaced gamma0 in [0.05 lambda, 20 lambda],
    /// r in {0.1, 0.5, 0.9, 1}.
    static SweepConfig figure_defaults(double lambda);
};

struct SweepRow {
    double gamma0 = 0.0;
    double r = 0.0;
    double f_tau = 0.0;
    double x_tau = 0.0;
    double tau_qsl = 0.0;
    double tau_qsl_generic_f1 = 0.0;
    double quad_error = 0.0;
    std::string error;  // empty on success
};

/// One row per (gamma0, r), sorted by (r, gamma0). Rows are computed
/// independently (optionally in parallel) and assembled in deterministic
/// order; per-row failures land in the row's error field.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned threads = 1);

/// Byte-deterministic CSV (12 significant digits, '\n' endings).
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// CSV of (t, Re G, Im G, |G|^2, gamma_t) on a uniform grid; gamma_t is
/// "nan" at zeros of G. With `with_oracle`, adds the Volterra solution and
/// deviation columns plus a max-deviation footer comment.
std::string gmodel_csv(const ReservoirParams& p, double t_max, std::size_t steps, bool with_oracle);

/// printf("%.12g") with a fixed C locale; the one float formatter used for
/// all text output.
std::string format_double(double v);

std::vector<double> log_spaced(double lo, double hi, std::size_t count);

}  // namespace qslkit
