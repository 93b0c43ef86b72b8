#include "fracdiff/verify.hpp"

#include <cmath>
#include <string>

#include "fracdiff/fdm.hpp"
#include "fracdiff/fem.hpp"
#include "fracdiff/special_functions.hpp"

namespace fracdiff {

double analytic_caputo_power(int q, double alpha, double t) {
    const int n_ic = alpha > 1.0 ? 2 : 1;
    if (q < 1 || q < n_ic) {
        throw InvalidPower("power q = " + std::to_string(q) +
                           " below the required count for alpha = " +
                           std::to_string(alpha));
    }
    if (!(t > 0.0)) {
        throw NonPositiveTime("t must be positive");
    }
    return gamma(q + 1.0) / gamma(q + 1.0 - alpha) *
           std::pow(t, q - alpha);
}

double direct_gl_weight(double alpha, double dt, int j) {
    if (j < 0) {
        throw InvalidCount("weight index must be >= 0");
    }
    const double dtf = std::pow(dt, -alpha);
    const double rounded = std::round(alpha);
    if (std::abs(alpha - rounded) < 1e-14) {
        // integer order: exact binomial, zero past j = alpha
        const int n = static_cast<int>(rounded);
        if (j > n) return 0.0;
        double binom = 1.0;
        for (int i = 0; i < j; ++i) binom *= double(n - i) / (i + 1);
        return (j % 2 == 0 ? binom : -binom) * dtf;
    }
    if (j == 0) return dtf;
    if (j == 1) return -alpha * dtf;
    // (-1)^j C(alpha, j) = Gamma(j - alpha) / (Gamma(-alpha) Gamma(j + 1));
    // sign comes from Gamma(-alpha), negative on (0,1), positive on (1,2)
    const long double lg = lgammal(static_cast<long double>(j) - alpha) -
                           lgammal(static_cast<long double>(j) + 1.0L) -
                           lgammal(static_cast<long double>(-alpha));
    const double sign = alpha < 1.0 ? -1.0 : 1.0;
    return sign * static_cast<double>(expl(lg)) * dtf;
}

std::vector<double> steady_state_profile(const ProblemSpec& spec) {
    const Grid& g = spec.grid;
    const double g0 = spec.left_bc(0.0);
    const double gl = spec.right_bc(0.0);
    const double scale = 1.0 + std::abs(g0) + std::abs(gl);
    for (double frac : {0.25, 0.5, 0.75, 1.0}) {
        const double t = frac * g.final_time;
        if (std::abs(spec.left_bc(t) - g0) > 1e-9 * scale ||
            std::abs(spec.right_bc(t) - gl) > 1e-9 * scale) {
            throw NonConstantBCs(
                "steady profile requires time-constant boundary data");
        }
    }
    std::vector<double> profile(g.space_steps + 1);
    for (int i = 0; i <= g.space_steps; ++i) {
        profile[i] = g0 + (gl - g0) * g.x(i) / g.length;
    }
    return profile;
}

double heat_series_solution(double x, double t, double length,
                            double diffusivity, double g0, double gl,
                            int terms) {
    constexpr double pi = 3.14159265358979323846;
    double u = g0 + (gl - g0) * x / length;
    for (int n = 1; n <= terms; ++n) {
        // sine coefficients of (zero IC) - (steady profile)
        const double sgn = n % 2 == 0 ? 1.0 : -1.0;
        const double bn = -2.0 / (n * pi) * (g0 - sgn * gl);
        const double lambda = diffusivity * n * n * pi * pi /
                              (length * length);
        u += bn * std::sin(n * pi * x / length) * std::exp(-lambda * t);
    }
    return u;
}

double overshoot_metric(std::span<const double> series, double target) {
    double worst = 0.0;
    for (double v : series) {
        worst = std::max(worst, v - target);
    }
    return worst;
}

ConvergenceRecord make_convergence_record(std::vector<double> dts,
                                          std::vector<double> errors) {
    if (dts.size() != errors.size() || dts.size() < 3) {
        throw InvalidCount(
            "convergence record needs >= 3 matching dt/error pairs");
    }
    const int n = static_cast<int>(dts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double lx = std::log(dts[i]);
        const double ly = std::log(std::max(errors[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    ConvergenceRecord rec;
    rec.dts = std::move(dts);
    rec.errors = std::move(errors);
    rec.empirical_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return rec;
}

ConvergenceRecord convergence_study(
    const std::function<ProblemSpec(double dt)>& family, Scheme scheme,
    std::span<const double> dts,
    const std::function<double(double x, double t)>& exact, double probe_x) {
    if (dts.size() < 3) {
        throw InvalidCount("convergence study needs >= 3 dt members");
    }
    std::vector<double> errors;
    for (double dt : dts) {
        ProblemSpec spec = family(dt);
        if (scheme == Scheme::FdmExplicit) {
            const double bound = stable_dt_max(
                spec.grid.h(), spec.order.alpha, spec.diffusivity);
            if (spec.grid.dt() > bound * (1.0 + 1e-12)) {
                throw UnstableMember("dt = " + std::to_string(spec.grid.dt()) +
                                     " violates the stability bound " +
                                     std::to_string(bound));
            }
        }
        SolveResult result =
            scheme == Scheme::FdmExplicit
                ? solve_fdm(spec, {.dt_policy = DtPolicy::ExplicitDt})
                : solve_fem(spec);
        const Grid& g = result.grid;
        const int pi = static_cast<int>(std::round(probe_x / g.h()));
        const double numeric = result.field.levels.back()[pi];
        errors.push_back(std::abs(numeric - exact(g.x(pi), g.final_time)));
    }
    return make_convergence_record(std::vector<double>(dts.begin(), dts.end()),
                                   std::move(errors));
}

} // namespace fracdiff
