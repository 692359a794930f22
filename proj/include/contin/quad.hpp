#pragma once

#include <cstddef>
#include <functional>

#include "contin/types.hpp"

namespace contin {

struct QuadratureSpec {
    double s_min = -40.0;
    double s_max = 12.0;
    std::size_t nodes = 4096; // initial interval count, doubled on refinement
    double refine_tol = 1e-10;
    int max_doublings = 8;
};

struct QuadResult {
    Cx value;
    double est_error = 0.0;  // |last refinement difference|
    std::size_t nodes_used = 0;
};

// Trapezoid rule with node doubling until |v_2n - v_n| < refine_tol (the
// integrands here are smooth and decay fast at both ends, so the trapezoid
// rule converges superalgebraically).  NoConvergence when doublings run out.
// Each pass is summed with the deterministic blocked reduction.
QuadResult trapezoid_refine(const std::function<Cx(double)>& f,
                            const QuadratureSpec& spec);

}  // namespace contin
