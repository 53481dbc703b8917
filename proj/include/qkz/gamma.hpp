#pragma once

#include "qkz/scalars.hpp"

namespace qkz {

// Analytic log Gamma, continuous on the plane minus the cut (-inf, 0].
// Throws Error("gamma-pole") within pole_tolerance of a nonpositive integer.
Cx log_gamma(const Cx& a);

// log sin(pi a), branch chosen so that the reflection and recurrence
// identities for log_gamma hold at log level off the real axis.
Cx log_sin_pi(const Cx& a);

Real gamma_pole_tolerance();

// Exact Bernoulli number B_n (B_1 = -1/2 convention).
Rational bernoulli_number(unsigned n);

}  // namespace qkz
