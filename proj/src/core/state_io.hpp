#pragma once

#include <string>

#include "core/density.hpp"
#include "core/qsl.hpp"
#include "core/sweep.hpp"
#include "core/verify.hpp"

namespace qslkit {

/// State JSON format: {"dim": n, "entries": [[re, im], ...]} with n*n entries
/// in row-major order. Parse errors throw ParseError; invariant failures
/// propagate as InvalidStateError from the DensityMatrix constructor.
DensityMatrix state_from_json(const std::string& text);
DensityMatrix state_from_file(const std::string& path);
std::string state_to_json(const DensityMatrix& rho);

/// Sweep config JSON. All keys optional; defaults are lambda=1, omega0=1,
/// tau=1, r_values={0.1,0.5,0.9,1}, gamma0 grid of 60 log-spaced points in
/// [0.05 lambda, 20 lambda]. "gamma0_grid" is either an explicit array or
/// {"min":..,"max":..,"count":..}; "quadrature" takes
/// {"n_points","refinement","purity_guard"}.
SweepConfig sweep_config_from_json(const std::string& text);
SweepConfig sweep_config_from_file(const std::string& path);

std::string bound_result_to_json(const BoundResult& r, bool with_samples = false);
std::string report_to_json(const ViolationReport& r);
std::string reports_to_json(const std::vector<ViolationReport>& reports);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qslkit
