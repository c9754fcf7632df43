// qslq: fidelity and speed-limit calculations for the damped two-level atom
// in a Lorentzian reservoir. Talks to the core only through the C API.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "qslkit.h"

namespace {

struct StateDeleter {
    void operator()(qslk_state* s) const { qslk_state_free(s); }
};
using StatePtr = std::unique_ptr<qslk_state, StateDeleter>;

struct StringDeleter {
    void operator()(char* s) const { qslk_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(qslk_status st) {
    std::cerr << "error: " << qslk_last_error() << "\n";
    std::exit(static_cast<int>(st));
}

void check(qslk_status st) {
    if (st != QSLK_OK) die(st);
}

StatePtr load_state(const std::string& path) {
    qslk_state* s = nullptr;
    check(qslk_state_from_file(path.c_str(), &s));
    return StatePtr(s);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        std::exit(2);
    }
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum speed limit toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 12345;
    unsigned threads = 1;
    std::string out_path;
    app.add_option("--seed", seed, "RNG seed for stochastic subcommands");
    app.add_option("--threads", threads, "worker threads for sweep");
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    // fidelity
    auto* fid = app.add_subcommand("fidelity", "fidelity between two state files")->fallthrough();
    std::string fid_kind = "newf";
    std::string file_a, file_b;
    fid->add_option("--kind", fid_kind, "bures, f1, f2, f3 or newf");
    fid->add_option("state_a", file_a, "state JSON file")->required();
    fid->add_option("state_b", file_b, "state JSON file")->required();

    // bound
    auto* bnd = app.add_subcommand("bound", "speed-limit time for a Werner initial state")->fallthrough();
    double b_r = 1.0, b_gamma0 = 1.0, b_lambda = 1.0, b_omega0 = 1.0, b_tau = 1.0;
    std::size_t b_npoints = 0, b_refine = 0;
    std::string b_method = "default", b_state_file;
    bool b_frozen = false;
    bnd->add_option("--r", b_r, "Werner mixing coefficient in [0,1]");
    bnd->add_option("--state", b_state_file, "initial state file (overrides --r)");
    bnd->add_option("--gamma0", b_gamma0, "coupling strength");
    bnd->add_option("--lambda", b_lambda, "reservoir spectral width");
    bnd->add_option("--omega0", b_omega0, "transition frequency");
    bnd->add_option("--tau", b_tau, "driving time");
    bnd->add_option("--n-points", b_npoints, "quadrature points (odd)");
    bnd->add_option("--refinement", b_refine, "quadrature refinement levels");
    bnd->add_option("--method", b_method, "default, mt-pure, or a fidelity kind name");
    bnd->add_flag("--frozen", b_frozen, "use the stationary ground state as the initial state");

    // sweep
    auto* swp = app.add_subcommand("sweep", "CSV sweep over (gamma0, r)")->fallthrough();
    std::string swp_config;
    swp->add_option("config", swp_config, "sweep config JSON file")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "stochastic property checks")->fallthrough();
    std::string v_property, v_kind = "newf", v_dims = "2,3,4";
    long v_trials = 10000;
    ver->add_option("property", v_property,
                    "jozsa, supermultiplicative, monotonicity, monotonicity-fixed, concavity, all")
        ->required();
    ver->add_option("--kind", v_kind, "fidelity kind");
    ver->add_option("--trials", v_trials, "trials per dimension");
    ver->add_option("--dims", v_dims, "comma-separated dimensions");

    // gmodel
    auto* gm = app.add_subcommand("gmodel", "decoherence function G(t) on a grid")->fallthrough();
    double g_gamma0 = 1.0, g_lambda = 1.0, g_tmax = 10.0, g_omega0 = 1.0;
    std::size_t g_steps = 1000;
    bool g_oracle = false;
    gm->add_option("--gamma0", g_gamma0, "coupling strength");
    gm->add_option("--lambda", g_lambda, "reservoir spectral width");
    gm->add_option("--omega0", g_omega0, "transition frequency");
    gm->add_option("--t-max", g_tmax, "final time");
    gm->add_option("--steps", g_steps, "grid steps (at least 100)");
    gm->add_flag("--oracle", g_oracle, "add an independent integral-equation solution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (fid->parsed()) {
        StatePtr a = load_state(file_a);
        StatePtr b = load_state(file_b);
        double value = 0.0;
        check(qslk_fidelity(fid_kind.c_str(), a.get(), b.get(), &value));
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", value);
        emit(buf, out_path);
        return 0;
    }

    if (bnd->parsed()) {
        const qslk_reservoir res{b_gamma0, b_lambda, b_omega0};
        qslk_quadrature quad{b_npoints, b_refine, 0.0};

        StatePtr rho0;
        if (b_frozen) {
            // ground state |0><0| (index 1) is stationary under the damping map
            qslk_state* s = nullptr;
            check(qslk_state_from_json(
                "{\"dim\":2,\"entries\":[[0,0],[0,0],[0,0],[1,0]]}", &s));
            rho0.reset(s);
        } else if (!b_state_file.empty()) {
            rho0 = load_state(b_state_file);
        } else {
            qslk_state* s = nullptr;
            check(qslk_state_werner(b_r, &s));
            rho0.reset(s);
        }

        if (b_method == "default") {
            char* json = nullptr;
            check(qslk_bound(rho0.get(), &res, b_tau, &quad, &json));
            CStr owned(json);
            emit(owned.get(), out_path);
        } else if (b_method == "mt-pure") {
            double value = 0.0;
            check(qslk_mt_pure_bound(rho0.get(), &res, b_tau, &quad, &value));
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", value);
            emit(buf, out_path);
        } else {
            double value = 0.0;
            check(qslk_generic_bound(b_method.c_str(), rho0.get(), &res, b_tau, &quad, &value));
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", value);
            emit(buf, out_path);
        }
        return 0;
    }

    if (swp->parsed()) {
        std::ifstream in(swp_config, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot open " << swp_config << "\n";
            return 2;
        }
        const std::string config((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
        char* csv = nullptr;
        check(qslk_sweep_csv(config.c_str(), threads, &csv));
        CStr owned(csv);
        emit(owned.get(), out_path);
        return 0;
    }

    if (ver->parsed()) {
        char* json = nullptr;
        const qslk_status st =
            qslk_verify(v_property.c_str(), v_kind.c_str(), v_trials, v_dims.c_str(), seed, &json);
        if (json) {
            CStr owned(json);
            emit(owned.get(), out_path);
        }
        if (st != QSLK_OK) die(st);
        return 0;
    }

    if (gm->parsed()) {
        const qslk_reservoir res{g_gamma0, g_lambda, g_omega0};
        char* csv = nullptr;
        check(qslk_gmodel_csv(&res, g_tmax, g_steps, g_oracle ? 1 : 0, &csv));
        CStr owned(csv);
        emit(owned.get(), out_path);
        return 0;
    }

    return 2;
}
