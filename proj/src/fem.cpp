#include "fracdiff/fem.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "fracdiff/special_functions.hpp"

namespace fracdiff {
namespace {

// A = M + dt^alpha K with Dirichlet rows replaced by identity.
TridiagonalMatrix system_matrix(const FemState& state, double dta) {
    const int n = state.mass.size();
    TridiagonalMatrix a;
    a.lower.resize(n);
    a.diag.resize(n);
    a.upper.resize(n);
    for (int i = 0; i < n; ++i) {
        a.lower[i] = state.mass.lower[i] + dta * state.stiffness.lower[i];
        a.diag[i] = state.mass.diag[i] + dta * state.stiffness.diag[i];
        a.upper[i] = state.mass.upper[i] + dta * state.stiffness.upper[i];
    }
    a.diag[0] = 1.0;
    a.upper[0] = 0.0;
    a.diag[n - 1] = 1.0;
    a.lower[n - 1] = 0.0;
    return a;
}

} // namespace

std::vector<double> TridiagonalMatrix::apply(std::span<const double> x) const {
    const int n = size();
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        double acc = diag[i] * x[i];
        if (i > 0) acc += lower[i] * x[i - 1];
        if (i < n - 1) acc += upper[i] * x[i + 1];
        y[i] = acc;
    }
    return y;
}

std::vector<double> thomas_solve(const TridiagonalMatrix& a,
                                 std::vector<double> rhs) {
    const int n = a.size();
    std::vector<double> c_star(n, 0.0);
    double pivot = a.diag[0];
    if (std::abs(pivot) < 1e-14) {
        throw SingularSystem("zero pivot in row 0");
    }
    c_star[0] = a.upper[0] / pivot;
    rhs[0] /= pivot;
    for (int i = 1; i < n; ++i) {
        pivot = a.diag[i] - a.lower[i] * c_star[i - 1];
        if (std::abs(pivot) < 1e-14) {
            throw SingularSystem("zero pivot in row " + std::to_string(i));
        }
        c_star[i] = a.upper[i] / pivot;
        rhs[i] = (rhs[i] - a.lower[i] * rhs[i - 1]) / pivot;
    }
    for (int i = n - 2; i >= 0; --i) {
        rhs[i] -= c_star[i] * rhs[i + 1];
    }
    return rhs;
}

FemState assemble(const ProblemSpec& spec) {
    const Grid& g = spec.grid;
    const int N = g.space_steps;
    const double h = g.h();
    const double ks = spec.diffusivity / h; // element stiffness scale
    const double ms = h / 6.0;              // element mass scale

    FemState state;
    auto zero = [N] {
        TridiagonalMatrix m;
        m.lower.assign(N + 1, 0.0);
        m.diag.assign(N + 1, 0.0);
        m.upper.assign(N + 1, 0.0);
        return m;
    };
    state.stiffness = zero();
    state.mass = zero();

    for (int e = 0; e < N; ++e) {
        state.stiffness.diag[e] += ks;
        state.stiffness.diag[e + 1] += ks;
        state.stiffness.upper[e] += -ks;
        state.stiffness.lower[e + 1] += -ks;

        state.mass.diag[e] += 2.0 * ms;
        state.mass.diag[e + 1] += 2.0 * ms;
        state.mass.upper[e] += ms;
        state.mass.lower[e + 1] += ms;
    }

    state.weights =
        compute_weights(spec.order.alpha, g.dt(), g.time_steps);
    return state;
}

std::vector<double> history_vector(const FemState& state, int f) {
    if (f < 1 || f > static_cast<int>(state.levels.size()) ||
        f > state.weights.max_index()) {
        throw IndexOutOfRange("history vector needs levels 0.." +
                              std::to_string(f - 1));
    }
    const int n = state.mass.size();
    const double dta = std::pow(state.weights.dt, state.weights.alpha);
    std::vector<double> h(n, 0.0);
    for (int j = 1; j <= f; ++j) {
        const double cj = state.weights.c[j];
        if (cj == 0.0) continue;
        const std::vector<double>& old = state.levels[f - j];
        for (int i = 0; i < n; ++i) {
            h[i] += cj * old[i];
        }
    }
    for (double& v : h) v *= -dta;
    return h;
}

std::vector<double> ic_vector(const ProblemSpec& spec, int f) {
    const Grid& g = spec.grid;
    const int N = g.space_steps;
    const double a = spec.order.alpha;
    const double tf = g.t(f);
    const double dta = std::pow(g.dt(), a);
    const int n_ic = spec.order.initial_condition_count();

    const double f0 = std::pow(tf, -a) * recip_gamma(1.0 - a);
    const double f1 =
        n_ic == 2 ? std::pow(tf, 1.0 - a) * recip_gamma(2.0 - a) : 0.0;

    std::vector<double> c(N + 1, 0.0);
    for (int i = 0; i <= N; ++i) {
        double acc =
            f0 * (spec.initial_value ? spec.initial_value(g.x(i)) : 0.0);
        if (n_ic == 2) {
            acc += f1 * spec.initial_rate(g.x(i));
        }
        c[i] = dta * acc;
    }
    return c;
}

std::vector<double> fem_step(const FemState& state, const ProblemSpec& spec,
                             int f) {
    const Grid& g = spec.grid;
    const int N = g.space_steps;
    const double dta = std::pow(g.dt(), spec.order.alpha);

    std::vector<double> h = history_vector(state, f);
    const std::vector<double> c = ic_vector(spec, f);
    for (int i = 0; i <= N; ++i) {
        h[i] += c[i];
    }
    std::vector<double> rhs = state.mass.apply(h);
    // b^f is zero for pure Dirichlet data without a source term
    rhs[0] = spec.left_bc(g.t(f));
    rhs[N] = spec.right_bc(g.t(f));

    return thomas_solve(system_matrix(state, dta), std::move(rhs));
}

SolveResult solve_fem(const ProblemSpec& input, const FemOptions&) {
    validate(input);
    const auto start = std::chrono::steady_clock::now();
    const ProblemSpec& spec = input;
    const int F = spec.grid.time_steps;

    SolverReport report;
    report.scheme = Scheme::FemImplicit;

    FemState state = assemble(spec);
    state.levels = seed_initial_levels(spec).levels;

    auto track = [&report](const std::vector<double>& v) {
        for (double x : v) {
            if (!std::isfinite(x) || std::abs(x) > kDivergenceThreshold) {
                report.diverged = true;
            }
            report.max_abs_value = std::max(report.max_abs_value, std::abs(x));
        }
    };
    for (const auto& level : state.levels) track(level);

    for (int f = spec.order.initial_condition_count();
         f <= F && !report.diverged; ++f) {
        std::vector<double> u = fem_step(state, spec, f);
        track(u);
        if (!report.diverged) {
            state.levels.push_back(std::move(u));
        }
    }

    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    SolutionField field;
    field.levels = std::move(state.levels);
    return {std::move(field), report, spec.grid};
}

} // namespace fracdiff
