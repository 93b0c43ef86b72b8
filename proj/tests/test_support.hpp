#pragma once

#include <cmath>
#include <vector>

#include "fracdiff/core.hpp"

namespace testsupport {

/// Reference scenario: L = 1, k = 1, zero initial data, boundaries held
/// at 40 and 20.
inline fracdiff::ProblemSpec scenario(double alpha, int n, double final_time,
                                      int time_steps) {
    fracdiff::ProblemSpec spec;
    spec.order.alpha = alpha;
    spec.diffusivity = 1.0;
    spec.grid = {1.0, n, final_time, time_steps};
    spec.initial_value = [](double) { return 0.0; };
    spec.initial_rate = [](double) { return 0.0; };
    spec.left_bc = [](double) { return 40.0; };
    spec.right_bc = [](double) { return 20.0; };
    return spec;
}

/// Independently coded textbook explicit Euler stepper for the heat
/// equation with Dirichlet data. Oracle for the alpha = 1 reduction of
/// the fractional scheme; shares no code with the solver.
inline std::vector<std::vector<double>> classic_explicit_heat(
    const fracdiff::ProblemSpec& spec) {
    const fracdiff::Grid& g = spec.grid;
    const int n = g.space_steps;
    const double r = spec.diffusivity * g.dt() / (g.h() * g.h());

    std::vector<std::vector<double>> levels;
    std::vector<double> u(n + 1);
    for (int i = 1; i < n; ++i) u[i] = spec.initial_value(g.x(i));
    u[0] = spec.left_bc(0.0);
    u[n] = spec.right_bc(0.0);
    levels.push_back(u);

    for (int f = 1; f <= g.time_steps; ++f) {
        std::vector<double> next(n + 1);
        for (int i = 1; i < n; ++i) {
            next[i] = u[i] + r * (u[i + 1] - 2.0 * u[i] + u[i - 1]);
        }
        next[0] = spec.left_bc(g.t(f));
        next[n] = spec.right_bc(g.t(f));
        levels.push_back(next);
        u = std::move(next);
    }
    return levels;
}

/// Independently coded backward-Euler linear-element FEM stepper for
/// the heat equation, solved with dense Gaussian elimination. Oracle
/// for the alpha = 1 reduction of the fractional FEM scheme.
inline std::vector<std::vector<double>> classic_backward_euler_fem(
    const fracdiff::ProblemSpec& spec) {
    const fracdiff::Grid& g = spec.grid;
    const int n = g.space_steps;
    const double h = g.h();
    const double dt = g.dt();
    const double k = spec.diffusivity;

    // dense A = M + dt K with identity Dirichlet rows
    std::vector<std::vector<double>> a(n + 1,
                                       std::vector<double>(n + 1, 0.0));
    for (int e = 0; e < n; ++e) {
        const double ke = k / h;
        const double me = h / 6.0;
        a[e][e] += 2.0 * me + dt * ke;
        a[e + 1][e + 1] += 2.0 * me + dt * ke;
        a[e][e + 1] += me - dt * ke;
        a[e + 1][e] += me - dt * ke;
    }
    for (int j = 0; j <= n; ++j) a[0][j] = a[n][j] = 0.0;
    a[0][0] = a[n][n] = 1.0;

    auto dense_solve = [n](std::vector<std::vector<double>> m,
                           std::vector<double> b) {
        for (int col = 0; col <= n; ++col) {
            int piv = col;
            for (int row = col + 1; row <= n; ++row) {
                if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
            }
            std::swap(m[col], m[piv]);
            std::swap(b[col], b[piv]);
            for (int row = col + 1; row <= n; ++row) {
                const double factor = m[row][col] / m[col][col];
                for (int j = col; j <= n; ++j) m[row][j] -= factor * m[col][j];
                b[row] -= factor * b[col];
            }
        }
        std::vector<double> x(n + 1);
        for (int row = n; row >= 0; --row) {
            double acc = b[row];
            for (int j = row + 1; j <= n; ++j) acc -= m[row][j] * x[j];
            x[row] = acc / m[row][row];
        }
        return x;
    };

    std::vector<std::vector<double>> levels;
    std::vector<double> u(n + 1);
    for (int i = 1; i < n; ++i) u[i] = spec.initial_value(g.x(i));
    u[0] = spec.left_bc(0.0);
    u[n] = spec.right_bc(0.0);
    levels.push_back(u);

    for (int f = 1; f <= g.time_steps; ++f) {
        // rhs = M u^{f-1}
        std::vector<double> rhs(n + 1, 0.0);
        for (int e = 0; e < n; ++e) {
            const double me = h / 6.0;
            rhs[e] += me * (2.0 * u[e] + u[e + 1]);
            rhs[e + 1] += me * (u[e] + 2.0 * u[e + 1]);
        }
        rhs[0] = spec.left_bc(g.t(f));
        rhs[n] = spec.right_bc(g.t(f));
        u = dense_solve(a, rhs);
        levels.push_back(u);
    }
    return levels;
}

inline double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) / scale;
}

} // namespace testsupport
