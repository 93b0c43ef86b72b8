#include "fracdiff/core.hpp"

#include <string>

namespace fracdiff {

const ProblemSpec& validate(const ProblemSpec& spec) {
    const double a = spec.order.alpha;
    if (!(a > 0.0) || !(a <= 2.0)) {
        throw OrderOutOfRange("alpha = " + std::to_string(a) +
                              " outside (0, 2]");
    }
    if (!(spec.diffusivity > 0.0)) {
        throw NonPositiveDiffusivity("k_alpha must be positive, got " +
                                     std::to_string(spec.diffusivity));
    }
    const Grid& g = spec.grid;
    if (g.space_steps < 2 || g.time_steps < 1 || !(g.length > 0.0) ||
        !(g.final_time > 0.0)) {
        throw DegenerateGrid("grid requires N >= 2, F >= 1, L > 0, T > 0");
    }
    if (a > 1.0 && !spec.initial_rate) {
        throw MissingInitialRate("alpha > 1 requires the initial rate p1");
    }
    return spec;
}

} // namespace fracdiff
