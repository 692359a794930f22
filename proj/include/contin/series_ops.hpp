#pragma once

#include <vector>

#include "contin/types.hpp"

namespace contin {

// Truncated power-series arithmetic on coefficient vectors of equal length
// n+1 (order n), index = power.  All operations truncate back to that length.

using Series = std::vector<Cx>;

Series series_mul(const Series& a, const Series& b);
Series series_derivative(const Series& a);

// a / b; requires b[0] != 0
Series series_div(const Series& a, const Series& b);

// a(b(z)); requires b[0] == 0
Series series_compose(const Series& a, const Series& b);

// Compositional inverse of f with f[0] = 0, f[1] != 0, by Newton iteration
// phi <- phi - (f(phi) - id) / f'(phi).
Series series_inverse(const Series& f);

}  // namespace contin
