#include "qslkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/errors.hpp"
#include "core/state_io.hpp"

using namespace qslkit;

struct qslk_state {
    DensityMatrix rho;
};

namespace {

thread_local std::string g_last_error;

qslk_status fail(qslk_status s, const char* msg) {
    g_last_error = msg;
    return s;
}

template <typename Fn>
qslk_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return QSLK_OK;
    } catch (const UsageError& e) {
        return fail(QSLK_ERR_USAGE, e.what());
    } catch (const ParseError& e) {
        return fail(QSLK_ERR_USAGE, e.what());
    } catch (const InvalidStateError& e) {
        return fail(QSLK_ERR_INVALID_STATE, e.what());
    } catch (const NumericError& e) {
        return fail(QSLK_ERR_NUMERIC, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(QSLK_ERR_NUMERIC, e.what());
    } catch (const std::exception& e) {
        return fail(QSLK_ERR_ASSERTION, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ReservoirParams to_params(const qslk_reservoir* res) {
    if (!res) throw UsageError("reservoir parameters are required");
    ReservoirParams p{res->gamma0, res->lambda, res->omega0};
    p.validate();
    return p;
}

QuadratureConfig to_quad(const qslk_quadrature* quad) {
    QuadratureConfig cfg;
    if (quad) {
        if (quad->n_points != 0) cfg.n_points = quad->n_points;
        if (quad->refinement != 0) cfg.refinement = quad->refinement;
        if (quad->purity_guard > 0.0) cfg.purity_guard = quad->purity_guard;
    }
    cfg.validate();
    return cfg;
}

void require(bool ok, const char* msg) {
    if (!ok) throw UsageError(msg);
}

}  // namespace

extern "C" {

const char* qslk_version(void) { return "1.0.0"; }

const char* qslk_last_error(void) { return g_last_error.c_str(); }

void qslk_string_free(char* s) { delete[] s; }

qslk_status qslk_state_from_json(const char* json_text, qslk_state** out) {
    return guarded([&] {
        require(json_text && out, "null argument");
        *out = new qslk_state{state_from_json(json_text)};
    });
}

qslk_status qslk_state_from_file(const char* path, qslk_state** out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new qslk_state{state_from_file(path)};
    });
}

qslk_status qslk_state_werner(double r, qslk_state** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        require(r >= 0.0 && r <= 1.0, "r must lie in [0, 1]");
        *out = new qslk_state{werner_state({r})};
    });
}

qslk_status qslk_state_to_json(const qslk_state* s, char** out_json) {
    return guarded([&] {
        require(s && out_json, "null argument");
        *out_json = dup_string(state_to_json(s->rho));
    });
}

size_t qslk_state_dim(const qslk_state* s) { return s ? s->rho.dim() : 0; }

void qslk_state_free(qslk_state* s) { delete s; }

qslk_status qslk_fidelity(const char* kind, const qslk_state* rho, const qslk_state* sigma,
                          double* out_value) {
    return guarded([&] {
        require(kind && rho && sigma && out_value, "null argument");
        *out_value = evaluate(fidelity_kind_from_string(kind), rho->rho, sigma->rho);
    });
}

qslk_status qslk_bound(const qslk_state* rho0, const qslk_reservoir* res, double tau,
                       const qslk_quadrature* quad, char** out_json) {
    return guarded([&] {
        require(rho0 && out_json, "null argument");
        const BoundResult r = qsl_time(rho0->rho, to_params(res), tau, to_quad(quad));
        *out_json = dup_string(bound_result_to_json(r));
    });
}

qslk_status qslk_mt_pure_bound(const qslk_state* rho0, const qslk_reservoir* res, double tau,
                               const qslk_quadrature* quad, double* out_value) {
    return guarded([&] {
        require(rho0 && out_value, "null argument");
        *out_value = mt_pure_bound(rho0->rho, to_params(res), tau, to_quad(quad));
    });
}

qslk_status qslk_generic_bound(const char* kind, const qslk_state* rho0,
                               const qslk_reservoir* res, double tau,
                               const qslk_quadrature* quad, double* out_value) {
    return guarded([&] {
        require(kind && rho0 && out_value, "null argument");
        *out_value = generic_fidelity_bound(fidelity_kind_from_string(kind), rho0->rho,
                                            to_params(res), tau, to_quad(quad));
    });
}

qslk_status qslk_sweep_csv(const char* config_json, unsigned threads, char** out_csv) {
    return guarded([&] {
        require(config_json && out_csv, "null argument");
        const SweepConfig cfg = sweep_config_from_json(config_json);
        *out_csv = dup_string(sweep_to_csv(run_sweep(cfg, threads)));
    });
}

qslk_status qslk_gmodel_csv(const qslk_reservoir* res, double t_max, size_t steps,
                            int with_oracle, char** out_csv) {
    return guarded([&] {
        require(out_csv != nullptr, "null argument");
        *out_csv = dup_string(gmodel_csv(to_params(res), t_max, steps, with_oracle != 0));
    });
}

qslk_status qslk_verify(const char* property, const char* kind, long trials,
                        const char* dims_csv, uint64_t seed, char** out_json) {
    return guarded([&] {
        require(property && out_json, "null argument");
        require(trials > 0, "trials must be > 0");
        const FidelityKind k = fidelity_kind_from_string(kind ? kind : "newf");

        std::vector<std::size_t> dims;
        {
            std::string csv = dims_csv ? dims_csv : "2,3,4";
            std::size_t pos = 0;
            while (pos < csv.size()) {
                std::size_t end = csv.find(',', pos);
                if (end == std::string::npos) end = csv.size();
                const std::string tok = csv.substr(pos, end - pos);
                char* rest = nullptr;
                const long d = std::strtol(tok.c_str(), &rest, 10);
                if (!rest || *rest != '\0' || d < 2 || d > 8)
                    throw UsageError("dims must be integers in [2, 8]");
                dims.push_back(static_cast<std::size_t>(d));
                pos = end + 1;
            }
            require(!dims.empty(), "empty dims list");
        }

        const std::string prop = property;
        std::vector<ViolationReport> reports;
        if (prop == "jozsa" || prop == "all") {
            auto jz = check_jozsa(k, trials, dims, seed);
            reports.insert(reports.end(), jz.begin(), jz.end());
        }
        if (prop == "supermultiplicative" || prop == "all")
            reports.push_back(check_supermultiplicative(trials, dims, seed + 1));
        if (prop == "monotonicity" || prop == "all")
            reports.push_back(check_monotonicity(k, trials, dims, seed + 2));
        if (prop == "monotonicity-fixed" || prop == "all")
            reports.push_back(check_monotonicity_fixed());
        if (prop == "concavity" || prop == "all")
            reports.push_back(check_concavity(trials, dims, seed + 3));
        if (reports.empty()) throw UsageError("unknown property: " + prop);

        *out_json = dup_string(reports_to_json(reports));
        for (const ViolationReport& r : reports)
            if (r.hard_failure) throw std::runtime_error("pinned check failed: " + r.property_name);
    });
}

}  // extern "C"
