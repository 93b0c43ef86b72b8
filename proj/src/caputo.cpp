#include "fracdiff/caputo.hpp"

#include <cmath>
#include <string>

#include "fracdiff/special_functions.hpp"

namespace fracdiff {

double gl_sum(std::span<const double> samples, const GlWeights& w, int f) {
    if (f < 0 || f >= static_cast<int>(samples.size()) || f > w.max_index()) {
        throw IndexOutOfRange("gl_sum level " + std::to_string(f) +
                              " exceeds samples or weights");
    }
    double acc = 0.0;
    for (int j = 0; j <= f; ++j) {
        acc += w.c[j] * samples[f - j];
    }
    return acc;
}

double initial_correction(double alpha, double t, const InitialData& init) {
    if (!(t > 0.0)) {
        throw NonPositiveTime("correction undefined at t = " +
                              std::to_string(t));
    }
    const int n_ic = alpha > 1.0 ? 2 : 1;
    if (static_cast<int>(init.p.size()) != n_ic) {
        throw Error("initial data length " + std::to_string(init.p.size()) +
                    " does not match required count " + std::to_string(n_ic));
    }
    double acc = 0.0;
    for (int k = 0; k < n_ic; ++k) {
        acc += std::pow(t, k - alpha) * recip_gamma(k - alpha + 1.0) *
               init.p[k];
    }
    return acc;
}

double discrete_caputo(std::span<const double> samples,
                       const InitialData& init, const GlWeights& w, int f) {
    return gl_sum(samples, w, f) -
           initial_correction(w.alpha, f * w.dt, init);
}

} // namespace fracdiff
