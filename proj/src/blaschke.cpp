#include "contin/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "contin/series_ops.hpp"

namespace contin {

namespace {

constexpr double kZeroHit = 1e-14;

Cx mobius(Cx a, Cx z) { return (z - a) / (1.0 - std::conj(a) * z); }

// Local frame around zero a_n of B: z = a_n + sigma w (domain scale), values
// divided by s.  Both scales are chosen so the inverse series psi has
// coefficients of order one no matter how tight the pair is; the natural
// coefficients sigma psi_m / s^m may overflow, the scaled frame never does.
struct ScaledInverse {
    Cx a;
    double sigma = 0.0;
    double s = 0.0;
    Series psi;     // psi(y), y = v / s; psi[0] = 0
    Cx fprime0;     // sigma psi_1 / s = 1 / B'(a)
    double r = 0.0; // s * radius estimate of psi
};

// coefficients of m_a(c + sigma w) through `order`
Series scaled_factor_germ(Cx a, Cx c, double sigma, int order) {
    Cx A = c - a;
    Cx B = 1.0 - std::conj(a) * c;
    Series g(static_cast<std::size_t>(order) + 1, Cx(0.0));
    g[0] = A / B;
    if (order >= 1) {
        g[1] = sigma * (1.0 - std::norm(a)) / (B * B);
        Cx ratio = sigma * std::conj(a) / B;
        for (int m = 2; m <= order; ++m)
            g[static_cast<std::size_t>(m)] =
                g[static_cast<std::size_t>(m - 1)] * ratio;
    }
    return g;
}

ScaledInverse build_scaled_inverse(const ZeroSequence& zs, std::size_t n,
                                   int order) {
    if (n >= zs.points.size())
        throw Error(ErrorCode::DomainViolation, "zero index out of range");
    if (order < 8)
        throw Error(ErrorCode::DomainViolation, "inverse needs order >= 8");
    ScaledInverse si;
    si.a = zs.points[n];
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < zs.points.size(); ++j) {
        if (j == n) continue;
        double d = std::abs(zs.points[j] - si.a);
        if (d <= 1e-10)
            throw Error(ErrorCode::MultipleZero,
                        "another zero within 1e-10 of the expansion zero");
        dmin = std::min(dmin, d);
    }
    si.sigma = std::isfinite(dmin) ? dmin / 2.0 : (1.0 - std::abs(si.a)) / 2.0;
    Series b(static_cast<std::size_t>(order) + 1, Cx(0.0));
    b[0] = 1.0;
    for (Cx a : zs.points)
        b = series_mul(b, scaled_factor_germ(a, si.a, si.sigma, order));
    b[0] = 0.0; // exact zero of B; kill the float residue
    if (b[1] == Cx(0.0))
        throw Error(ErrorCode::MultipleZero, "vanishing derivative at zero");
    si.s = std::abs(b[1]) / 2.0;
    for (Cx& v : b) v /= si.s;
    si.psi = series_inverse(b);
    si.fprime0 = si.sigma * si.psi[1] / si.s;
    Germ pg;
    pg.center = 0.0;
    pg.coeffs = si.psi;
    si.r = si.s * estimate_radius(pg).value;
    return si;
}

// f(v) = a + sigma psi(v / s), the inverse in natural coordinates
Cx eval_scaled_inverse(const ScaledInverse& si, Cx v) {
    Cx y = v / si.s;
    Cx acc = si.psi.back();
    for (std::size_t k = si.psi.size() - 1; k-- > 0;) acc = acc * y + si.psi[k];
    return si.a + si.sigma * acc;
}

}  // namespace

ZeroSequence make_pair_sequence(int n_pairs, double angle_step) {
    if (n_pairs < 0)
        throw Error(ErrorCode::DomainViolation, "negative pair count");
    ZeroSequence zs;
    for (int n = 0; n < n_pairs; ++n) {
        Cx rot = std::polar(1.0, angle_step * n);
        double mod = 1.0 - std::ldexp(1.0, -(n + 2));
        Cx a = mod * rot;
        Cx b = a + (1.0 - std::abs(a)) * (1.0 - std::abs(a)) * rot;
        if (!(std::abs(a) < 1.0) || !(std::abs(b) < 1.0))
            throw Error(ErrorCode::InvariantViolation,
                        "pair zero escaped the unit disk");
        double gap_bound = (1.0 - std::abs(a)) * (1.0 - std::abs(a));
        if (std::abs(a - b) > gap_bound + 1e-14)
            throw Error(ErrorCode::InvariantViolation,
                        "pair gap exceeds (1-|a|)^2");
        zs.points.push_back(a);
        zs.points.push_back(b);
    }
    return zs;
}

Cx blaschke_eval(const ZeroSequence& zs, Cx z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw Error(ErrorCode::OutOfDisk, "evaluation outside the closed disk");
    Cx prod = 1.0;
    for (Cx a : zs.points) prod *= mobius(a, z);
    return prod;
}

Cx blaschke_derivative(const ZeroSequence& zs, Cx z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw Error(ErrorCode::OutOfDisk, "evaluation outside the closed disk");
    std::ptrdiff_t hit = -1;
    for (std::size_t k = 0; k < zs.points.size(); ++k) {
        if (std::abs(z - zs.points[k]) < kZeroHit) {
            if (hit >= 0)
                throw Error(ErrorCode::MultipleZero,
                            "two zeros at the evaluation point");
            hit = static_cast<std::ptrdiff_t>(k);
        }
    }
    if (hit < 0) {
        Cx sum = 0.0;
        for (Cx a : zs.points) {
            sum += (1.0 - std::norm(a)) /
                   ((z - a) * (1.0 - std::conj(a) * z));
        }
        return blaschke_eval(zs, z) * sum;
    }
    // removable form at a zero: B'(a_k) = m'_k(a_k) * prod_{j != k} m_j(a_k)
    Cx a = zs.points[static_cast<std::size_t>(hit)];
    Cx rest = 1.0;
    for (std::size_t j = 0; j < zs.points.size(); ++j)
        if (j != static_cast<std::size_t>(hit))
            rest *= mobius(zs.points[j], z);
    Cx denom = 1.0 - std::conj(a) * z;
    return rest * (1.0 - std::norm(a)) / (denom * denom);
}

Germ inverse_germ(const ZeroSequence& zs, std::size_t n, int order) {
    ScaledInverse si = build_scaled_inverse(zs, n, order);
    Germ g;
    g.center = 0.0;
    g.coeffs.resize(static_cast<std::size_t>(order) + 1);
    g.coeffs[0] = si.a;
    Cx scale = si.sigma;
    for (int m = 1; m <= order; ++m) {
        scale /= si.s;
        g.coeffs[static_cast<std::size_t>(m)] =
            scale * si.psi[static_cast<std::size_t>(m)];
        if (!is_finite(g.coeffs[static_cast<std::size_t>(m)]))
            throw Error(ErrorCode::Overflow,
                        "natural inverse coefficients exceed double range");
    }
    g.radius_hint = si.r;
    return g;
}

KoebeReport koebe_bounds_report(const ZeroSequence& zs, std::size_t n,
                                int order) {
    if (n % 2 != 0)
        throw Error(ErrorCode::DomainViolation, "report index must be even");
    bool single = zs.points.size() == 1;
    if (!single && n + 1 >= zs.points.size())
        throw Error(ErrorCode::DomainViolation, "zero has no partner");
    ScaledInverse si = build_scaled_inverse(zs, n, order);
    KoebeReport rep;
    rep.n = n;
    rep.a_n = si.a;
    rep.deriv_f = si.fprime0;
    rep.deriv_B = blaschke_derivative(zs, si.a);
    rep.r_n = si.r;
    double dmag = std::abs(rep.deriv_f);
    rep.bound_shrink = 4.0 * (1.0 - std::abs(si.a));
    double slack = 1e-6 * std::max(1.0, rep.r_n);
    rep.passes_quatre2 = rep.r_n <= rep.bound_shrink + slack;
    if (single) {
        rep.tri2_applicable = false;
        rep.passes_tri2 = false;
    } else {
        rep.gap = std::abs(zs.points[n + 1] - zs.points[n]);
        rep.bound_4_gap = 4.0 * rep.gap;
        rep.passes_tri2 = rep.bound_4_gap >= rep.r_n * dmag - slack;
    }
    rep.koebe_quarter_ok = true;
    rep.excludes_partner = true;
    double rho = 0.9 * rep.r_n;
    double lower = 0.25 * rho * dmag * 0.95;
    for (int j = 0; j < 32; ++j) {
        Cx v = rho * std::polar(1.0, 2.0 * kPi * j / 32.0);
        Cx fv = eval_scaled_inverse(si, v);
        if (std::abs(fv - si.a) < lower) rep.koebe_quarter_ok = false;
        if (!single && std::abs(fv - zs.points[n + 1]) < 1e-6)
            rep.excludes_partner = false;
    }
    return rep;
}

std::vector<KoebeReport> covering_failure_demo(int n_pairs, int order,
                                               double angle_step) {
    if (n_pairs < 1 || n_pairs > 12)
        throw Error(ErrorCode::DomainViolation, "demo needs 1..12 pairs");
    ZeroSequence zs = make_pair_sequence(n_pairs, angle_step);
    std::vector<KoebeReport> out;
    for (int n = 0; n < n_pairs; ++n)
        out.push_back(koebe_bounds_report(zs, static_cast<std::size_t>(2 * n),
                                          order));
    return out;
}

}  // namespace contin
