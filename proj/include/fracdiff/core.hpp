#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fracdiff/errors.hpp"

namespace fracdiff {

using ScalarFn = std::function<double(double)>;

/// Absolute magnitude beyond which a run is declared divergent.
inline constexpr double kDivergenceThreshold = 1e12;

/// Order of the time-fractional derivative, 0 < alpha <= 2.
struct FractionalOrder {
    double alpha = 1.0;

    /// Number of initial functions the problem statement requires:
    /// one (the initial field) for alpha <= 1, two (field and rate)
    /// for alpha > 1.
    int initial_condition_count() const { return alpha > 1.0 ? 2 : 1; }
};

/// Uniform space/time discretization: N+1 space nodes on [0, L],
/// F+1 time levels on [0, T].
struct Grid {
    double length = 1.0;     ///< L [m]
    int space_steps = 2;     ///< N
    double final_time = 1.0; ///< T [s]
    int time_steps = 1;      ///< F

    double h() const { return length / space_steps; }
    double dt() const { return final_time / time_steps; }
    double x(int i) const { return i * h(); }
    double t(int f) const { return f * dt(); }
};

/// Full statement of one initial-boundary-value problem.
///
/// Initial/boundary data are callables sampled at grid points only.
/// Boundary values take precedence over initial data at the corner
/// nodes; compatibility of p0 with g0/gL is not required.
struct ProblemSpec {
    FractionalOrder order;
    double diffusivity = 1.0; ///< k_alpha [m^2 / s^alpha], > 0
    Grid grid;
    ScalarFn initial_value;   ///< p0(x)
    ScalarFn initial_rate;    ///< p1(x), required exactly when alpha > 1
    ScalarFn left_bc;         ///< g0(t)
    ScalarFn right_bc;        ///< gL(t)
};

enum class Scheme { FdmExplicit, FemImplicit };

inline const char* scheme_name(Scheme s) {
    return s == Scheme::FdmExplicit ? "fdm" : "fem";
}

/// Solution values for all stored time levels, levels[f][i] = u(x_i, t_f).
/// A diverged run stores only the levels computed before blow-up.
struct SolutionField {
    std::vector<std::vector<double>> levels;

    int stored_levels() const { return static_cast<int>(levels.size()); }
    double value(int f, int i) const { return levels[f][i]; }
};

/// Run metadata accompanying a SolutionField.
struct SolverReport {
    Scheme scheme = Scheme::FdmExplicit;
    std::optional<double> stable_dt_max; ///< absent for the implicit scheme
    bool diverged = false;
    double max_abs_value = 0.0;
    double wall_time = 0.0; ///< seconds
};

/// Checks all ProblemSpec invariants; returns the spec unchanged.
///
/// Throws OrderOutOfRange, NonPositiveDiffusivity, DegenerateGrid or
/// MissingInitialRate.
const ProblemSpec& validate(const ProblemSpec& spec);

} // namespace fracdiff
