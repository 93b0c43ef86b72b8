#pragma once

#include "fracdiff/fdm.hpp"

namespace fracdiff {

/// Symmetric tridiagonal storage; lower[0] and upper[n-1] are unused.
struct TridiagonalMatrix {
    std::vector<double> lower, diag, upper;

    int size() const { return static_cast<int>(diag.size()); }
    std::vector<double> apply(std::span<const double> x) const;
};

/// Direct Thomas elimination. Throws SingularSystem when a pivot falls
/// below 1e-14 in magnitude.
std::vector<double> thomas_solve(const TridiagonalMatrix& a,
                                 std::vector<double> rhs);

/// Assembled Galerkin operators plus the per-run weight table and the
/// solution history the time stepper accumulates.
struct FemState {
    TridiagonalMatrix stiffness; ///< K, element blocks (k/h)[[1,-1],[-1,1]]
    TridiagonalMatrix mass;      ///< M, element blocks (h/6)[[2,1],[1,2]]
    GlWeights weights;
    std::vector<std::vector<double>> levels;
};

/// Assembles K and M from linear elements and precomputes the GL
/// weights for the grid's step count.
FemState assemble(const ProblemSpec& spec);

/// History vector h^f = -dt^alpha * sum_{j=1}^{f} c_j u^{f-j}.
std::vector<double> history_vector(const FemState& state, int f);

/// Initial-condition vector c^f = dt^alpha * sum_k t_f^{k-alpha} /
/// Gamma(k-alpha+1) * p_k, componentwise at the nodes.
std::vector<double> ic_vector(const ProblemSpec& spec, int f);

/// Solves (M + dt^alpha K) u^f = M (h^f + c^f) with the first and last
/// rows replaced by identity rows carrying the Dirichlet values.
/// Returns u^f without storing it.
std::vector<double> fem_step(const FemState& state, const ProblemSpec& spec,
                             int f);

struct FemOptions {};

/// Implicit Galerkin run over the whole time range. No stability bound
/// applies; report.stable_dt_max is absent.
SolveResult solve_fem(const ProblemSpec& spec, const FemOptions& options = {});

} // namespace fracdiff
