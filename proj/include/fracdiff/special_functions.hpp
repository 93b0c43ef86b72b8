#pragma once

#include "fracdiff/errors.hpp"

namespace fracdiff {

/// Gamma function for real arguments via a Lanczos approximation with
/// reflection for x < 0.5. Throws PoleArgument when x is a non-positive
/// integer (within 1e-12).
double gamma(double x);

/// 1/Gamma(x). Entire: returns exactly 0 at the poles of Gamma, which is
/// the convention that makes integer-order correction terms vanish
/// without branching.
double recip_gamma(double x);

/// sin(pi * x) with argument reduction done before multiplying by pi,
/// so relative accuracy survives near integer x.
double sin_pi(double x);

} // namespace fracdiff
