#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contin/types.hpp"

namespace contin {

// Truncated power series sum a_k (z - center)^k, k = 0..order.
struct Germ {
    Cx center;
    std::vector<Cx> coeffs;
    std::optional<double> radius_hint;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct RadiusEstimate {
    double value = 0.0;      // +inf means "looks entire"
    int window = 0;          // number of trailing points used in the fit
    double confidence = 0.0; // 1/(1+rms) of the fit residual, in (0, 1]
};

// Cauchy-Hadamard estimate from the decay of log|a_k| over the trailing
// window of nonzero coefficients.  Requires order >= 8.
RadiusEstimate estimate_radius(const Germ& g);

// Horner evaluation at fixed order (deterministic).  Guarded to the disk
// |z - center| < 0.95 * estimate (skipped when order < 8 or unsafe is set).
Cx eval_germ(const Germ& g, Cx z, bool unsafe = false);

// Term-by-term derivative; order drops by one.  DegenerateOrder on order 0.
Germ derivative_germ(const Germ& g);

Germ make_named_germ(const std::string& name, int order);

}  // namespace contin
