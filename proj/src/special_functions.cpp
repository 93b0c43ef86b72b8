#include "fracdiff/special_functions.hpp"

#include <cmath>
#include <string>

namespace fracdiff {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtTwoPi = 2.50662827463100050241576528481104525;

// Lanczos g = 7, 9-term coefficient set.
constexpr int kG = 7;
constexpr double kCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kPoleTol = 1e-12;

bool is_nonpositive_integer(double x) {
    if (x > 0.5) return false;
    const double n = std::round(x);
    return n <= 0.0 && std::abs(x - n) <= kPoleTol;
}

// Gamma(x) for x >= 0.5.
double lanczos(double x) {
    x -= 1.0;
    double acc = kCoef[0];
    for (int i = 1; i < kG + 2; ++i) {
        acc += kCoef[i] / (x + i);
    }
    const double t = x + kG + 0.5;
    return kSqrtTwoPi * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

} // namespace

double sin_pi(double x) {
    const double n = std::round(x);
    const double d = x - n; // exact: |d| <= 0.5 and n is near x
    const double s = std::sin(kPi * d);
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double gamma(double x) {
    if (is_nonpositive_integer(x)) {
        throw PoleArgument("gamma pole at x = " + std::to_string(x));
    }
    if (x < 0.5) {
        return kPi / (sin_pi(x) * lanczos(1.0 - x));
    }
    return lanczos(x);
}

double recip_gamma(double x) {
    if (is_nonpositive_integer(x)) {
        return 0.0;
    }
    if (x < 0.5) {
        return sin_pi(x) * lanczos(1.0 - x) / kPi;
    }
    return 1.0 / lanczos(x);
}

} // namespace fracdiff
