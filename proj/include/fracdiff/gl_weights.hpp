#pragma once

#include <vector>

#include "fracdiff/errors.hpp"

namespace fracdiff {

/// Grünwald-Letnikov coefficient sequence c_j = dt^{-alpha} (-1)^j C(alpha, j).
/// The dt^{-alpha} factor is baked in; entries carry units s^{-alpha}.
struct GlWeights {
    double alpha = 1.0;
    double dt = 1.0;
    std::vector<double> c;

    int max_index() const { return static_cast<int>(c.size()) - 1; }
};

/// Generates c_0..c_J by the two-term recurrence
///   c_0 = dt^{-alpha},  c_j = (1 - (1+alpha)/j) c_{j-1}.
/// For integer alpha the sequence terminates with exact zeros past j = alpha.
GlWeights compute_weights(double alpha, double dt, int count);

/// Dimensionless normalized partial sum dt^alpha * sum_{j<=J} c_j.
/// Diagnostic for the memory-effect tail; tends to 0 as J grows.
double weight_partial_sum(const GlWeights& w, int j_max);

} // namespace fracdiff
