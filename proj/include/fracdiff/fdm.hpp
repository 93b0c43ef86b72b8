#pragma once

#include <optional>

#include "fracdiff/caputo.hpp"
#include "fracdiff/core.hpp"

namespace fracdiff {

enum class DtPolicy {
    ExplicitDt,        ///< use the grid's dt as given (warned if unstable)
    AutoFromStability, ///< dt = safety * stable bound, rounded to divide T
};

struct FdmOptions {
    DtPolicy dt_policy = DtPolicy::AutoFromStability;
    double safety = 0.9; ///< in (0, 1], AutoFromStability only
    /// Short-memory truncation: drop history terms older than this many
    /// levels. Absent = full history.
    std::optional<int> memory_window;
};

/// Largest dt for which the explicit scheme's self-coefficient stays
/// non-negative:  (h^2 alpha / (2 k_alpha))^{1/alpha}.
double stable_dt_max(double h, double alpha, double k_alpha);

/// Fills levels 0..n_ic-1 from the initial conditions: level 0 = p0,
/// level 1 (only for alpha > 1) = p0 + dt*p1 (forward-Euler seed).
/// Boundary nodes carry the Dirichlet values at every seeded level.
SolutionField seed_initial_levels(const ProblemSpec& spec);

/// One explicit update producing level f from levels < f. Throws
/// Diverged when the new level crosses the divergence threshold.
std::vector<double> fdm_step(const ProblemSpec& spec, const GlWeights& w,
                             const SolutionField& field, int f,
                             std::optional<int> memory_window = {});

struct SolveResult {
    SolutionField field;
    SolverReport report;
    Grid grid; ///< grid actually stepped (dt may differ from the input
               ///< spec under AutoFromStability)
};

/// Runs the explicit scheme over the whole time range. A divergent run
/// returns the partial field with report.diverged set rather than
/// throwing.
SolveResult solve_fdm(const ProblemSpec& spec, const FdmOptions& options = {});

} // namespace fracdiff
