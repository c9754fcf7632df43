#include "core/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace qslkit {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

double num(const json& j, const char* key) {
    if (!j.at(key).is_number()) throw ParseError(std::string("expected number for \"") + key + "\"");
    return j.at(key).get<double>();
}

}  // namespace

DensityMatrix state_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw ParseError("state JSON needs \"dim\" and \"entries\"");
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        throw ParseError("\"dim\" must be a positive integer");
    const std::size_t dim = j["dim"].get<std::size_t>();
    const json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != dim * dim)
        throw ParseError("\"entries\" must hold dim*dim [re, im] pairs in row-major order");

    Cmat m(dim, dim);
    for (std::size_t k = 0; k < dim * dim; ++k) {
        const json& e = entries[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw ParseError("each entry must be a [re, im] pair");
        m(k / dim, k % dim) = cplx(e[0].get<double>(), e[1].get<double>());
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix state_from_file(const std::string& path) {
    return state_from_json(read_file(path));
}

std::string state_to_json(const DensityMatrix& rho) {
    const std::size_t dim = rho.dim();
    json entries = json::array();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            entries.push_back({rho(i, k).real(), rho(i, k).imag()});
    json j{{"dim", dim}, {"entries", std::move(entries)}};
    return j.dump();
}

SweepConfig sweep_config_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object()) throw ParseError("sweep config must be a JSON object");

    SweepConfig cfg;
    if (j.contains("lambda")) cfg.lambda = num(j, "lambda");
    if (j.contains("omega0")) cfg.omega0 = num(j, "omega0");
    if (j.contains("tau")) cfg.tau = num(j, "tau");
    if (!(cfg.lambda > 0.0)) throw ParseError("\"lambda\" must be > 0");

    if (j.contains("r_values")) {
        if (!j["r_values"].is_array() || j["r_values"].empty())
            throw ParseError("\"r_values\" must be a nonempty array");
        cfg.r_values = j["r_values"].get<std::vector<double>>();
    } else {
        cfg.r_values = {0.1, 0.5, 0.9, 1.0};
    }

    if (j.contains("gamma0_grid")) {
        const json& g = j["gamma0_grid"];
        if (g.is_array()) {
            if (g.empty()) throw ParseError("\"gamma0_grid\" array must be nonempty");
            cfg.gamma0_grid = g.get<std::vector<double>>();
        } else if (g.is_object()) {
            const double lo = num(g, "min");
            const double hi = num(g, "max");
            if (!g.contains("count") || !g["count"].is_number_unsigned())
                throw ParseError("\"gamma0_grid.count\" must be a positive integer");
            cfg.gamma0_grid = log_spaced(lo, hi, g["count"].get<std::size_t>());
        } else {
            throw ParseError("\"gamma0_grid\" must be an array or a {min,max,count} object");
        }
    } else {
        cfg.gamma0_grid = log_spaced(0.05 * cfg.lambda, 20.0 * cfg.lambda, 60);
    }

    if (j.contains("quadrature")) {
        const json& q = j["quadrature"];
        if (!q.is_object()) throw ParseError("\"quadrature\" must be an object");
        if (q.contains("n_points")) cfg.quadrature.n_points = q["n_points"].get<std::size_t>();
        if (q.contains("refinement")) cfg.quadrature.refinement = q["refinement"].get<std::size_t>();
        if (q.contains("purity_guard")) cfg.quadrature.purity_guard = num(q, "purity_guard");
    }

    if (j.contains("output_path")) cfg.output_path = j["output_path"].get<std::string>();

    cfg.validate();
    return cfg;
}

SweepConfig sweep_config_from_file(const std::string& path) {
    return sweep_config_from_json(read_file(path));
}

std::string bound_result_to_json(const BoundResult& r, bool with_samples) {
    json j{{"tau", r.tau},
           {"f_tau", r.f_tau},
           {"x_tau", r.x_tau},
           {"tau_qsl", r.tau_qsl},
           {"quad_error", r.quad_error},
           {"converged", r.converged}};
    if (with_samples) {
        json samples = json::array();
        for (const auto& [t, v] : r.integrand_samples) samples.push_back({t, v});
        j["integrand_samples"] = std::move(samples);
    }
    return j.dump();
}

std::string report_to_json(const ViolationReport& r) {
    json j{{"property", r.property_name},
           {"trials", r.trials},
           {"tolerance", r.tolerance},
           {"worst_margin", r.worst_margin},
           {"seed", r.seed},
           {"violated", r.violated()},
           {"hard_failure", r.hard_failure}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    return j.dump();
}

std::string reports_to_json(const std::vector<ViolationReport>& reports) {
    json arr = json::array();
    for (const ViolationReport& r : reports) arr.push_back(json::parse(report_to_json(r)));
    return arr.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << content;
    if (!out.good()) throw UsageError("write failed: " + path);
}

}  // namespace qslkit
