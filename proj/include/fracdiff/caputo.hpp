#pragma once

#include <span>
#include <vector>

#include "fracdiff/gl_weights.hpp"

namespace fracdiff {

/// Initial derivative values at the evaluation point: p[k] is the k-th
/// time derivative at t = 0+. Length must equal the number of initial
/// functions for the order in use (1 for alpha <= 1, 2 otherwise).
struct InitialData {
    std::vector<double> p;
};

/// Grünwald-Letnikov history sum  sum_{j=0}^{f} c_j * samples[f-j].
/// This is the discrete Riemann-Liouville operator at t_f.
double gl_sum(std::span<const double> samples, const GlWeights& w, int f);

/// Correction converting the discrete Riemann-Liouville value into a
/// Caputo one:  sum_k t^{k-alpha} / Gamma(k-alpha+1) * p[k].
/// The reciprocal-gamma pole convention makes integer-order terms vanish.
double initial_correction(double alpha, double t, const InitialData& init);

/// Discrete Caputo derivative at t_f = f*dt:
///   gl_sum(samples, w, f) - initial_correction(alpha, f*dt, init).
/// Undefined at f = 0 (the correction is singular there).
double discrete_caputo(std::span<const double> samples,
                       const InitialData& init, const GlWeights& w, int f);

} // namespace fracdiff
