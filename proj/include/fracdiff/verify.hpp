#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fracdiff/core.hpp"

namespace fracdiff {

/// dt-refinement study result; empirical_order is the least-squares
/// slope of log(error) against log(dt).
struct ConvergenceRecord {
    std::vector<double> dts;
    std::vector<double> errors;
    double empirical_order = 0.0;
};

/// Closed-form Caputo derivative of t^q:
///   Gamma(q+1) / Gamma(q+1-alpha) * t^{q-alpha},  q >= n_ic(alpha).
/// Uses only the gamma function; never touches solver code.
double analytic_caputo_power(int q, double alpha, double t);

/// Direct-binomial Grünwald-Letnikov weight (-1)^j C(alpha, j) dt^{-alpha},
/// evaluated through log-gamma in extended precision. Independent oracle
/// for the recurrence-generated weights.
double direct_gl_weight(double alpha, double dt, int j);

/// Time-independent solution of the diffusion equation with constant
/// Dirichlet data: the linear profile g0 + (gL - g0) x / L sampled at
/// the grid nodes. Throws NonConstantBCs when the data varies in time.
std::vector<double> steady_state_profile(const ProblemSpec& spec);

/// Classical (alpha = 1) heat solution with zero initial field and
/// constant Dirichlet data, as a truncated sine series around the
/// steady profile.
double heat_series_solution(double x, double t, double length,
                            double diffusivity, double g0, double gl,
                            int terms);

/// Largest excursion of the series above the target, clamped at zero.
double overshoot_metric(std::span<const double> series, double target);

/// Builds a record from measured errors; needs at least three members.
ConvergenceRecord make_convergence_record(std::vector<double> dts,
                                          std::vector<double> errors);

/// Runs a solver per dt member and measures the absolute error against
/// an exact solution at (probe_x, T). The family callback produces a
/// spec whose grid realizes the requested dt. FDM members violating the
/// stability bound raise UnstableMember.
ConvergenceRecord convergence_study(
    const std::function<ProblemSpec(double dt)>& family, Scheme scheme,
    std::span<const double> dts,
    const std::function<double(double x, double t)>& exact, double probe_x);

} // namespace fracdiff
