#include "contin/laplace.hpp"

#include <algorithm>
#include <cmath>

#include "contin/gamma_fn.hpp"
#include "contin/quad.hpp"

namespace contin {

namespace {

constexpr Cx kI{0.0, 1.0};

Cx contour_direction(const ContourSpec& c) {
    if (!(std::abs(c.direction) > 0.0))
        throw Error(ErrorCode::DomainViolation, "contour direction is zero");
    return c.direction;
}

// integrand of G along u = base + dir t, including the du/dt Jacobian and
// the (-2 pi i u)^k derivative weight
Cx contour_integrand(double t, Cx z, Cx base, Cx dir, int k) {
    Cx u = base + dir * t;
    Cx val = std::exp(-2.0 * kPi * kI * u * z + kI * kPi * u * u) * gamma_fn(u);
    for (int j = 0; j < k; ++j) val *= -2.0 * kPi * kI * u;
    return val * dir;
}

QuadratureSpec line_spec(const ContourSpec& c) {
    if (c.half_extent < 0.0)
        throw Error(ErrorCode::DomainViolation, "negative contour extent");
    if (c.nodes < 129 || c.nodes % 2 == 0)
        throw Error(ErrorCode::DomainViolation,
                    "contour nodes must be odd and >= 129");
    QuadratureSpec q;
    q.s_min = -c.half_extent;
    q.s_max = c.half_extent;
    q.nodes = c.nodes - 1;  // interval count
    q.refine_tol = c.refine_tol;
    q.max_doublings = c.max_doublings;
    return q;
}

Cx integrate_contour(Cx z, const ContourSpec& c, int k, Cx base) {
    if (c.half_extent == 0.0) return 0.0;
    Cx dir = contour_direction(c);
    return trapezoid_refine(
               [&](double t) { return contour_integrand(t, z, base, dir, k); },
               line_spec(c))
        .value;
}

void check_strip(Cx z) {
    if (std::abs(z.imag()) > 2.0)
        throw Error(ErrorCode::DomainViolation,
                    "contour tuned for |Im z| <= 2");
}

}  // namespace

Cx laplace_G(Cx z, const ContourSpec& c) {
    check_strip(z);
    return integrate_contour(z, c, 0, c.base);
}

Cx laplace_G_deriv(Cx z, int k, const ContourSpec& c) {
    check_strip(z);
    if (k < 0 || k > 64)
        throw Error(ErrorCode::DomainViolation, "derivative order out of range");
    return integrate_contour(z, c, k, c.base);
}

std::vector<FunctionalEqReport> verify_functional_equation(
    const std::vector<Cx>& zs, const ContourSpec& c) {
    std::vector<FunctionalEqReport> out;
    for (Cx z : zs) {
        FunctionalEqReport r;
        r.z = z;
        r.lhs = laplace_G(z + 1.0, c);
        r.rhs = std::exp(-2.0 * kPi * kI * z) / (2.0 * kPi * kI) *
                laplace_G_prime(z, c);
        r.rel_residual = std::abs(r.lhs - r.rhs) /
                         std::max({std::abs(r.lhs), std::abs(r.rhs), 1e-300});
        out.push_back(r);
    }
    return out;
}

double nontriviality_check(Cx z1, Cx z2, const ContourSpec& c) {
    auto ratio = [&](Cx z) {
        return laplace_G(z, c) / std::exp(std::exp(2.0 * kPi * kI * z));
    };
    return std::abs(ratio(z1) - ratio(z2));
}

double contour_translation_residual(Cx z, const ContourSpec& c) {
    check_strip(z);
    // g(v) = exp(-2 pi i (v+1)(z+1) + i pi (v+1)^2) Gamma(v+1); integrating
    // over the base-0 line is the substitution u = v + 1 in G(z+1), and the
    // base-1 line must match because g is analytic in the strip between the
    // two lines (the gamma poles v = -1, -2, ... sit outside it).
    Cx dir = contour_direction(c);
    auto integral_with_base = [&](Cx base) {
        return trapezoid_refine(
                   [&](double t) {
                       return contour_integrand(t, z + 1.0, base + 1.0, dir, 0);
                   },
                   line_spec(c))
            .value;
    };
    Cx i0 = integral_with_base(Cx(0.0));
    Cx i1 = integral_with_base(Cx(1.0));
    return std::abs(i0 - i1) /
           std::max({std::abs(i0), std::abs(i1), 1e-300});
}

Germ laplace_germ(Cx z0, int order, const ContourSpec& c) {
    if (order < 0 || order > 32)
        throw Error(ErrorCode::DomainViolation, "germ order out of range");
    Germ g;
    g.center = z0;
    g.coeffs.resize(static_cast<std::size_t>(order) + 1);
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        g.coeffs[static_cast<std::size_t>(k)] =
            laplace_G_deriv(z0, k, c) / fact;
    }
    return g;
}

DecayEnvelope decay_envelope(Cx z, const ContourSpec& c, std::size_t samples) {
    check_strip(z);
    if (samples < 16)
        throw Error(ErrorCode::DomainViolation, "too few envelope samples");
    Cx dir = contour_direction(c);
    double T = c.half_extent;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < samples; ++i) {
        double t = -T + 2.0 * T * static_cast<double>(i) /
                            static_cast<double>(samples - 1);
        double m = std::abs(contour_integrand(t, z, c.base, dir, 0));
        if (m <= 0.0 || !std::isfinite(m)) continue;
        // remove the Gaussian factor; the remainder grows at most linearly
        // in |t| on the log scale
        xs.push_back(std::abs(t));
        ys.push_back(std::log(m) + 2.0 * kPi * t * t);
    }
    if (xs.size() < 2)
        throw Error(ErrorCode::NoConvergence, "envelope fit has no samples");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    DecayEnvelope env;
    env.A = sxx > 0.0 ? sxy / sxx : 0.0;
    double intercept = my - env.A * mx;
    double shift = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double excess = ys[i] - (env.A * xs[i] + intercept);
        if (excess > shift) shift = excess;
    }
    env.B = intercept + shift;
    env.worst_violation = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double excess = ys[i] - (env.A * xs[i] + env.B);
        if (excess > env.worst_violation) env.worst_violation = excess;
    }
    return env;
}

}  // namespace contin
