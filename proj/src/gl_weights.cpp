#include "fracdiff/gl_weights.hpp"

#include <cmath>
#include <string>

namespace fracdiff {

GlWeights compute_weights(double alpha, double dt, int count) {
    if (count < 0) {
        throw InvalidCount("weight count must be >= 0, got " +
                           std::to_string(count));
    }
    GlWeights w;
    w.alpha = alpha;
    w.dt = dt;
    w.c.resize(count + 1);
    w.c[0] = std::pow(dt, -alpha);
    for (int j = 1; j <= count; ++j) {
        w.c[j] = (1.0 - (1.0 + alpha) / j) * w.c[j - 1];
    }
    return w;
}

double weight_partial_sum(const GlWeights& w, int j_max) {
    if (j_max < 0 || j_max > w.max_index()) {
        throw IndexOutOfRange("partial sum index " + std::to_string(j_max) +
                              " outside stored weights");
    }
    double acc = 0.0;
    for (int j = 0; j <= j_max; ++j) {
        acc += w.c[j];
    }
    return std::pow(w.dt, w.alpha) * acc;
}

} // namespace fracdiff
