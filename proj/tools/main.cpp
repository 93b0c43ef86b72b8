#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fracdiff/fdm.hpp"
#include "fracdiff/fem.hpp"
#include "fracdiff/runner.hpp"
#include "fracdiff/verify.hpp"

namespace {

using namespace fracdiff;

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

int execute(const std::string& config_path, const std::string& scheme,
            double alpha_override, const std::string& out_override,
            bool concurrent) {
    RunConfig cfg = load_config(config_path);
    if (!scheme.empty()) {
        if (scheme == "fdm") {
            cfg.scheme = SchemeChoice::Fdm;
        } else if (scheme == "fem") {
            cfg.scheme = SchemeChoice::Fem;
        } else if (scheme == "both") {
            cfg.scheme = SchemeChoice::Both;
        } else {
            throw Error("--scheme must be fdm, fem or both");
        }
    }
    if (alpha_override > 0.0) {
        if (alpha_override > 2.0) {
            throw Error("--alpha must lie in (0, 2]");
        }
        cfg.alphas = {alpha_override};
    }
    if (!out_override.empty()) {
        cfg.output_dir = out_override;
    }
    return run(cfg, concurrent);
}

bool report(const char* name, bool ok, const std::string& detail) {
    std::printf("%s %s (%s)\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    return ok;
}

ProblemSpec scenario_spec(double alpha, int n, double final_time,
                          int time_steps) {
    ProblemSpec spec;
    spec.order.alpha = alpha;
    spec.diffusivity = 1.0;
    spec.grid = {1.0, n, final_time, time_steps};
    spec.initial_value = [](double) { return 0.0; };
    spec.initial_rate = [](double) { return 0.0; };
    spec.left_bc = [](double) { return 40.0; };
    spec.right_bc = [](double) { return 20.0; };
    return spec;
}

int run_verification() {
    bool all = true;

    // GL recurrence against the direct binomial
    {
        double worst = 0.0;
        for (double alpha : {0.3, 0.75, 1.0, 1.5, 1.99}) {
            GlWeights w = compute_weights(alpha, 1.0, 1000);
            for (int j = 0; j <= 1000; ++j) {
                const double direct = direct_gl_weight(alpha, 1.0, j);
                const double scale = std::max(std::abs(direct), 1e-300);
                worst = std::max(worst, std::abs(w.c[j] - direct) / scale);
            }
        }
        all &= report("gl-weight recurrence vs direct binomial",
                      worst < 1e-12, "max rel diff " + std::to_string(worst));
    }

    // discrete Caputo on t^2, alpha = 0.5: first-order convergence
    {
        std::vector<double> dts, errors;
        for (int p = 6; p <= 10; ++p) {
            const double dt = std::pow(2.0, -p);
            const int f = static_cast<int>(std::round(1.0 / dt));
            GlWeights w = compute_weights(0.5, dt, f);
            std::vector<double> samples(f + 1);
            for (int i = 0; i <= f; ++i) {
                samples[i] = (i * dt) * (i * dt);
            }
            const double value =
                discrete_caputo(samples, InitialData{{0.0}}, w, f);
            dts.push_back(dt);
            errors.push_back(
                std::abs(value - analytic_caputo_power(2, 0.5, 1.0)));
        }
        ConvergenceRecord rec = make_convergence_record(dts, errors);
        all &= report("discrete Caputo of t^2 converges (alpha = 0.5)",
                      rec.empirical_order >= 0.8,
                      "order " + std::to_string(rec.empirical_order));
    }

    // explicit scheme at alpha = 1 against the analytic heat series
    {
        std::vector<double> dts, errors;
        for (int n : {20, 40, 80}) {
            ProblemSpec spec = scenario_spec(1.0, n, 0.1, 1);
            const double dt =
                0.45 * spec.grid.h() * spec.grid.h() / spec.diffusivity;
            spec.grid.time_steps =
                static_cast<int>(std::ceil(0.1 / dt - 1e-12));
            SolveResult r =
                solve_fdm(spec, {.dt_policy = DtPolicy::ExplicitDt});
            const int pi = n / 2;
            const double exact = heat_series_solution(
                r.grid.x(pi), 0.1, 1.0, 1.0, 40.0, 20.0, 50);
            dts.push_back(r.grid.dt());
            errors.push_back(std::abs(r.field.levels.back()[pi] - exact));
        }
        ConvergenceRecord rec = make_convergence_record(dts, errors);
        all &= report("explicit scheme matches heat series (alpha = 1)",
                      rec.empirical_order >= 0.8,
                      "order " + std::to_string(rec.empirical_order));
    }

    // implicit scheme reaches the linear steady profile
    {
        ProblemSpec spec = scenario_spec(1.25, 10, 5.0, 500);
        SolveResult r = solve_fem(spec);
        const double mid = r.field.levels.back()[5];
        all &= report("implicit scheme steady state (alpha = 1.25)",
                      std::abs(mid - 30.0) < 0.3,
                      "u(0.5, 5) = " + std::to_string(mid));
    }

    // short-memory truncation error shrinks as the window grows
    {
        ProblemSpec spec = scenario_spec(0.75, 8, 1.0, 1);
        FdmOptions base;
        SolveResult full = solve_fdm(spec, base);
        const int F = full.grid.time_steps;
        double prev = -1.0;
        bool monotone = true;
        for (int window : {F, F / 2, F / 4, F / 8}) {
            FdmOptions opts = base;
            opts.memory_window = window;
            SolveResult truncated = solve_fdm(spec, opts);
            const double d = std::abs(truncated.field.levels.back()[4] -
                                      full.field.levels.back()[4]);
            monotone = monotone && d >= prev;
            prev = d;
        }
        all &= report("memory-window error grows as the window shrinks",
                      monotone, "final discrepancy " + std::to_string(prev));
    }

    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-D time-fractional diffusion solver"};
    app.require_subcommand(1);

    std::string config_path, scheme, out_dir;
    double alpha = 0.0;

    CLI::App* cmd_run = app.add_subcommand("run", "execute one config");
    cmd_run->add_option("config", config_path, "config file")->required();
    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "execute a config concurrently");
    cmd_sweep->add_option("config", config_path, "config file")->required();
    for (CLI::App* c : {cmd_run, cmd_sweep}) {
        c->add_option("--scheme", scheme, "override: fdm, fem or both");
        c->add_option("--alpha", alpha, "override: single alpha value");
        c->add_option("--out", out_dir, "override: output directory");
    }
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run the verification studies");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_verify->parsed()) {
            return run_verification();
        }
        return execute(config_path, scheme, alpha, out_dir,
                       cmd_sweep->parsed());
    } catch (const fracdiff::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
