#pragma once

#include <vector>

#include "contin/quad.hpp"
#include "contin/types.hpp"

namespace contin {

// h(z) = int_0^inf exp(-z t + i (log t)^2 / (4 pi)) dt and its continuation
// by rotating the integration ray.  With t = e^(s - i theta) the sector
// integral is
//   int exp(-z e^(s-i theta) + i (s-i theta)^2/(4 pi) + (s-i theta)) ds,
// absolutely convergent on Re(z e^(-i theta)) > 0: as z circles the origin
// counterclockwise the ray rotates clockwise in lockstep.

struct SectorEvaluation {
    double theta = 0.0;
    Cx value;
    double est_error = 0.0;
};

// One sector evaluation; SectorViolation unless Re(z e^(-i theta)) > 0.
SectorEvaluation lewy_eval(Cx z, double theta, const QuadratureSpec& spec = {});

// -int exp(-z e^s + i s^2/(4 pi) + 2 s) ds = h'(z) for Re z > 0.
SectorEvaluation lewy_derivative_direct(Cx z, const QuadratureSpec& spec = {});

// Continues h around z0 e^(i theta), theta = 0..2 pi in n_steps increments,
// checking consecutive sectors at the boundary-bisector witness point
// (disagreement beyond 10 * refine_tol raises OverlapMismatch).  Returns all
// sector evaluations; the last one is the loop value at theta = 2 pi.
// n_steps = 0 degenerates to lewy_eval(z0, 0); otherwise n_steps >= 5.
std::vector<SectorEvaluation> lewy_continue_loop(Cx z0, int n_steps,
                                                 const QuadratureSpec& spec = {});

// L1 mass of the integrand on the arc t = R e^(i a), a from 0 to -eta,
// parametrized gamma_R(t) = R e^(-i t eta), t in [0, 1].  Decays in R, which
// justifies rotating the ray through the sector.
double contour_shift_check(double R, double eta, Cx z, std::size_t n = 4096);

}  // namespace contin
