#pragma once

#include <cstddef>
#include <vector>

#include "contin/germ.hpp"
#include "contin/types.hpp"

namespace contin {

// G(z) = int_C exp(-2 pi i u z + i pi u^2) Gamma(u) du over the slanted line
// u = base + (1+i) t, t in [-T, T].  The Gaussian factor exp(i pi u^2) decays
// like exp(-2 pi t^2) on that line, so modest T suffices on |Im z| <= 2.

struct ContourSpec {
    Cx base = {1.0, 0.0};
    Cx direction = {1.0, 1.0}; // used as-is: u = base + direction * t
    double half_extent = 6.0;
    std::size_t nodes = 2049; // odd; interval count nodes-1 doubles on refine
    double refine_tol = 1e-10;
    int max_doublings = 6;
};

struct FunctionalEqReport {
    Cx z;
    Cx lhs; // G(z + 1)
    Cx rhs; // (1 / 2 pi i) e^(-2 pi i z) G'(z)
    double rel_residual = 0.0;
};

Cx laplace_G(Cx z, const ContourSpec& c = {});

// k-th derivative via the (-2 pi i u)^k weight under the integral sign.
Cx laplace_G_deriv(Cx z, int k, const ContourSpec& c = {});

inline Cx laplace_G_prime(Cx z, const ContourSpec& c = {}) {
    return laplace_G_deriv(z, 1, c);
}

std::vector<FunctionalEqReport> verify_functional_equation(
    const std::vector<Cx>& zs, const ContourSpec& c = {});

// |R(z1) - R(z2)| for R(z) = G(z) / exp(exp(2 pi i z)); bounded away from 0
// exactly because G is not the exponential solution of the functional
// equation.
double nontriviality_check(Cx z1, Cx z2, const ContourSpec& c = {});

// Relative difference between int g over the base-0 and base-1 lines for the
// substituted integrand g(v) = exp(-2 pi i (v+1)(z+1) + i pi (v+1)^2)
// Gamma(v+1), analytic between the lines; near 0 by Cauchy's theorem.
double contour_translation_residual(Cx z, const ContourSpec& c = {});

// Taylor germ of G at z0 through `order` from the derivative weights.
Germ laplace_germ(Cx z0, int order, const ContourSpec& c = {});

// Least-squares decay model log|f(t)| <= A |t| + B - 2 pi t^2 for the
// integrand modulus along the contour at z; A fitted, B shifted up so the
// bound holds at every sample.
struct DecayEnvelope {
    double A = 0.0;
    double B = 0.0;
    double worst_violation = 0.0; // after the shift; <= 0 by construction
};
DecayEnvelope decay_envelope(Cx z, const ContourSpec& c = {},
                             std::size_t samples = 513);

}  // namespace contin
