#include "fracdiff/fdm.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <string>

#include "fracdiff/special_functions.hpp"

namespace fracdiff {
namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

} // namespace

double stable_dt_max(double h, double alpha, double k_alpha) {
    return std::pow(h * h * alpha / (2.0 * k_alpha), 1.0 / alpha);
}

SolutionField seed_initial_levels(const ProblemSpec& spec) {
    const Grid& g = spec.grid;
    const int N = g.space_steps;
    const int n_ic = spec.order.initial_condition_count();

    SolutionField field;
    for (int f = 0; f < n_ic; ++f) {
        std::vector<double> level(N + 1);
        for (int i = 1; i < N; ++i) {
            level[i] = spec.initial_value ? spec.initial_value(g.x(i)) : 0.0;
            if (f == 1) {
                level[i] += g.dt() * spec.initial_rate(g.x(i));
            }
        }
        level[0] = spec.left_bc(g.t(f));
        level[N] = spec.right_bc(g.t(f));
        field.levels.push_back(std::move(level));
    }
    return field;
}

std::vector<double> fdm_step(const ProblemSpec& spec, const GlWeights& w,
                             const SolutionField& field, int f,
                             std::optional<int> memory_window) {
    const Grid& g = spec.grid;
    const int N = g.space_steps;
    const double a = spec.order.alpha;
    const double dt = g.dt();
    const double dta = std::pow(dt, a);
    const double diff = spec.diffusivity / (g.h() * g.h());
    const double self = a / dta - 2.0 * diff;
    const double tf = g.t(f);
    const int n_ic = spec.order.initial_condition_count();

    // correction factors t_f^{k-a} / Gamma(k-a+1); pole convention zeroes
    // them for integer alpha
    double corr0 = std::pow(tf, -a) * recip_gamma(1.0 - a);
    double corr1 =
        n_ic == 2 ? std::pow(tf, 1.0 - a) * recip_gamma(2.0 - a) : 0.0;

    // history sum over levels f-2 and older, newest first
    const int j_max = std::min(f, memory_window.value_or(f));
    std::vector<double> hist(N + 1, 0.0);
    for (int j = 2; j <= j_max; ++j) {
        const double cj = w.c[j];
        if (cj == 0.0) continue; // integer orders terminate the weights
        const std::vector<double>& old = field.levels[f - j];
        for (int i = 1; i < N; ++i) {
            hist[i] += cj * old[i];
        }
    }

    const std::vector<double>& prev = field.levels[f - 1];
    std::vector<double> u(N + 1);
    for (int i = 1; i < N; ++i) {
        double corr =
            corr0 * (spec.initial_value ? spec.initial_value(g.x(i)) : 0.0);
        if (n_ic == 2) {
            corr += corr1 * spec.initial_rate(g.x(i));
        }
        u[i] = dta * (self * prev[i] + diff * (prev[i + 1] + prev[i - 1]) -
                      hist[i] + corr);
    }
    u[0] = spec.left_bc(tf);
    u[N] = spec.right_bc(tf);

    const double m = max_abs(u);
    if (m > kDivergenceThreshold || !all_finite(u)) {
        throw Diverged("explicit scheme diverged at level " +
                           std::to_string(f),
                       m);
    }
    return u;
}

SolveResult solve_fdm(const ProblemSpec& input, const FdmOptions& options) {
    validate(input);
    if (!(options.safety > 0.0) || options.safety > 1.0) {
        throw Error("safety factor must be in (0, 1]");
    }
    if (options.memory_window && *options.memory_window < 2) {
        throw Error("memory window must be >= 2");
    }

    ProblemSpec spec = input;
    const double bound = stable_dt_max(spec.grid.h(), spec.order.alpha,
                                       spec.diffusivity);
    if (options.dt_policy == DtPolicy::AutoFromStability) {
        const double target = options.safety * bound;
        const int steps = std::max(
            spec.order.initial_condition_count(),
            static_cast<int>(std::ceil(spec.grid.final_time / target -
                                       1e-12)));
        spec.grid.time_steps = steps;
    } else if (spec.grid.dt() > bound) {
        std::cerr << "fracdiff: warning: dt = " << spec.grid.dt()
                  << " exceeds the stability bound " << bound << "\n";
    }

    const auto start = std::chrono::steady_clock::now();
    const int F = spec.grid.time_steps;
    const GlWeights w =
        compute_weights(spec.order.alpha, spec.grid.dt(), F);

    SolverReport report;
    report.scheme = Scheme::FdmExplicit;
    report.stable_dt_max = bound;

    SolutionField field = seed_initial_levels(spec);
    for (const auto& level : field.levels) {
        report.max_abs_value = std::max(report.max_abs_value, max_abs(level));
    }

    for (int f = spec.order.initial_condition_count(); f <= F; ++f) {
        try {
            std::vector<double> u =
                fdm_step(spec, w, field, f, options.memory_window);
            report.max_abs_value =
                std::max(report.max_abs_value, max_abs(u));
            field.levels.push_back(std::move(u));
        } catch (const Diverged& d) {
            report.diverged = true;
            report.max_abs_value =
                std::max(report.max_abs_value, d.max_abs_value);
            break;
        }
    }

    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    return {std::move(field), report, spec.grid};
}

} // namespace fracdiff
