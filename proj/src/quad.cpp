#include "contin/quad.hpp"

#include <cmath>

#include "contin/reduce.hpp"

namespace contin {

namespace {

Cx trapezoid_pass(const std::function<Cx(double)>& f, double a, double b,
                  std::size_t intervals) {
    double h = (b - a) / static_cast<double>(intervals);
    Cx s = blocked_sum(intervals + 1, [&](std::size_t i) {
        double w = (i == 0 || i == intervals) ? 0.5 : 1.0;
        return w * f(a + h * static_cast<double>(i));
    });
    return s * h;
}

}  // namespace

QuadResult trapezoid_refine(const std::function<Cx(double)>& f,
                            const QuadratureSpec& spec) {
    if (spec.nodes < 64)
        throw Error(ErrorCode::DomainViolation, "need at least 64 nodes");
    if (!(spec.s_max > spec.s_min))
        throw Error(ErrorCode::DomainViolation, "empty integration window");
    std::size_t n = spec.nodes;
    Cx prev = trapezoid_pass(f, spec.s_min, spec.s_max, n);
    for (int d = 0; d < spec.max_doublings; ++d) {
        n *= 2;
        Cx cur = trapezoid_pass(f, spec.s_min, spec.s_max, n);
        double diff = std::abs(cur - prev);
        if (diff <= spec.refine_tol * std::max(1.0, std::abs(cur)))
            return {cur, diff, n};
        prev = cur;
    }
    throw Error(ErrorCode::NoConvergence,
                "quadrature did not refine to tolerance");
}

}  // namespace contin
