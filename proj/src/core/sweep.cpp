#include "core/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "core/errors.hpp"

namespace qslkit {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2) throw UsageError("log_spaced: bad range");
    std::vector<double> v(count);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(count - 1));
    v.front() = lo;
    v.back() = hi;
    return v;
}

void SweepConfig::validate() const {
    if (!(lambda > 0.0)) throw UsageError("SweepConfig: lambda must be > 0");
    if (!(tau > 0.0)) throw UsageError("SweepConfig: tau must be > 0");
    if (omega0 < 0.0) throw UsageError("SweepConfig: omega0 must be >= 0");
    if (gamma0_grid.empty()) throw UsageError("SweepConfig: empty gamma0 grid");
    if (r_values.empty()) throw UsageError("SweepConfig: empty r list");
    for (double g : gamma0_grid)
        if (!(g > 0.0)) throw UsageError("SweepConfig: gamma0 values must be > 0");
    for (double r : r_values)
        if (r < 0.0 || r > 1.0) throw UsageError("SweepConfig: r values must lie in [0,1]");
    quadrature.validate();
}

SweepConfig SweepConfig::figure_defaults(double lambda) {
    SweepConfig cfg;
    cfg.lambda = lambda;
    cfg.gamma0_grid = log_spaced(0.05 * lambda, 20.0 * lambda, 60);
    cfg.r_values = {0.1, 0.5, 0.9, 1.0};
    return cfg;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned threads) {
    cfg.validate();
    if (threads == 0) threads = 1;

    struct Point {
        double r, gamma0;
    };
    std::vector<Point> points;
    for (double r : cfg.r_values)
        for (double g : cfg.gamma0_grid) points.push_back({r, g});
    std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
        return a.r != b.r ? a.r < b.r : a.gamma0 < b.gamma0;
    });

    std::vector<SweepRow> rows(points.size());
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1)) {
            SweepRow& row = rows[i];
            row.r = points[i].r;
            row.gamma0 = points[i].gamma0;
            try {
                const ReservoirParams p{points[i].gamma0, cfg.lambda, cfg.omega0};
                const DensityMatrix rho0 = werner_state({points[i].r});
                const BoundResult b = qsl_time(rho0, p, cfg.tau, cfg.quadrature);
                row.f_tau = b.f_tau;
                row.x_tau = b.x_tau;
                row.tau_qsl = b.tau_qsl;
                row.quad_error = b.quad_error;
                row.tau_qsl_generic_f1 =
                    generic_fidelity_bound(FidelityKind::F1, rho0, p, cfg.tau, cfg.quadrature);
            } catch (const Error& e) {
                row.error = e.what();
            }
        }
    };

    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "gamma0,r,f_tau,x_tau,tau_qsl,tau_qsl_generic_f1,quad_error,error\n";
    for (const SweepRow& row : rows) {
        out += format_double(row.gamma0);
        out += ',';
        out += format_double(row.r);
        out += ',';
        if (row.error.empty()) {
            out += format_double(row.f_tau);
            out += ',';
            out += format_double(row.x_tau);
            out += ',';
            out += format_double(row.tau_qsl);
            out += ',';
            out += format_double(row.tau_qsl_generic_f1);
            out += ',';
            out += format_double(row.quad_error);
            out += ',';
        } else {
            std::string msg = row.error;
            for (char& c : msg)
                if (c == ',' || c == '\n') c = ';';
            out += ",,,,,";
            out += msg;
        }
        out += '\n';
    }
    return out;
}

std::string gmodel_csv(const ReservoirParams& p, double t_max, std::size_t steps,
                       bool with_oracle) {
    p.validate();
    if (!(t_max > 0.0)) throw UsageError("gmodel_csv: t_max must be > 0");
    if (steps < 100) throw UsageError("gmodel_csv: needs at least 100 steps");

    std::vector<cplx> oracle;
    if (with_oracle) oracle = solve_g_volterra(p, t_max, steps);

    std::string out = "t,re_g,im_g,abs_g2,gamma_t";
    if (with_oracle) out += ",re_g_volterra,abs_dev";
    out += '\n';

    double max_dev = 0.0;
    const double h = t_max / static_cast<double>(steps);
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * h;
        const cplx g = g_function(t, p);
        out += format_double(t);
        out += ',';
        out += format_double(g.real());
        out += ',';
        out += format_double(g.imag());
        out += ',';
        out += format_double(std::norm(g));
        out += ',';
        try {
            out += format_double(decay_rate(t, p));
        } catch (const NumericError&) {
            out += "nan";
        }
        if (with_oracle) {
            const double dev = std::abs(oracle[k] - g);
            max_dev = std::max(max_dev, dev);
            out += ',';
            out += format_double(oracle[k].real());
            out += ',';
            out += format_double(dev);
        }
        out += '\n';
    }
    if (with_oracle) {
        out += "# max_deviation = ";
        out += format_double(max_dev);
        out += '\n';
    }
    return out;
}

}  // namespace qslkit
