#pragma once

#include "contin/types.hpp"

namespace contin {

// Lanczos (g = 7, 9 terms) with reflection for Re u < 0.5.
// PoleAtNonpositiveInteger when u is within 1e-12 of 0, -1, -2, ...
Cx gamma_fn(Cx u);

// Relative deviation of gamma_fn from the leading Stirling approximation
// exp((u - 1/2) Log u - u + log(2 pi)/2).  Requires |u| >= 5 and
// |arg u| < pi - 0.1; decays like 1/(12|u|).
double stirling_check(Cx u);

}  // namespace contin
