#include "contin/lacunary.hpp"

#include <cmath>

namespace contin {

namespace {

double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    return sxx > 0.0 ? sxy / sxx : 0.0;
}

// m unrollings of h(z) = z^2 + h(z^2); m = 0 is the direct sum.
Cx unrolled_eval(Cx z, int m, double tol) {
    if (std::abs(z) >= 1.0)
        throw Error(ErrorCode::OutOfDisk, "lacunary series needs |z| < 1");
    Cx partial = 0.0;
    Cx y = z;
    for (int j = 0; j < m; ++j) {
        y = y * y;
        partial += y;
    }
    return partial + lacunary_eval(y, tol);
}

}  // namespace

Cx lacunary_eval(Cx z, double tol) {
    if (std::abs(z) >= 1.0)
        throw Error(ErrorCode::OutOfDisk, "lacunary series needs |z| < 1");
    Cx acc = 1.0;
    Cx w = z;
    for (int it = 0; it < 200; ++it) {
        w = w * w;
        acc += w;
        if (std::abs(w) < tol) return acc;
    }
    throw Error(ErrorCode::NoConvergence, "lacunary series did not settle");
}

Cx telescoped_eval(Cx z, int m, double tol) {
    if (m < 1)
        throw Error(ErrorCode::DomainViolation, "depth must be >= 1");
    return unrolled_eval(z, m, tol);
}

RadialProbeReport radial_probe(std::uint64_t k, int m, int m_max) {
    if (m < 0 || m > 48 || m_max < 8 || m_max > 52)
        throw Error(ErrorCode::DomainViolation, "bad probe depth");
    if (k >= (1ULL << m))
        throw Error(ErrorCode::DomainViolation, "direction index needs k < 2^m");
    RadialProbeReport rep;
    rep.k = k;
    rep.m = m;
    double denom = std::ldexp(1.0, m);  // 2^m
    double angle = 2.0 * kPi * static_cast<double>(k) / denom;
    rep.direction = std::polar(1.0, angle);
    std::vector<double> js, moduli;
    for (int j = 4; j <= m_max; ++j) {
        double r = 1.0 - std::ldexp(1.0, -j);
        Cx v = unrolled_eval(r * rep.direction, m, 1e-15);
        rep.radii.push_back(r);
        rep.values.push_back(v);
        moduli.push_back(std::abs(v));
        js.push_back(static_cast<double>(j));
    }
    rep.growth_slope = ls_slope(js, moduli);
    rep.blow_up_detected = rep.growth_slope >= 0.3;
    return rep;
}

std::vector<RadialProbeReport> boundary_scan(int m, int m_max) {
    if (m < 0 || m > 8)
        throw Error(ErrorCode::DomainViolation, "scan depth must be in [0, 8]");
    std::vector<RadialProbeReport> out;
    std::uint64_t count = 1ULL << m;
    for (std::uint64_t k = 0; k < count; ++k)
        out.push_back(radial_probe(k, m, m_max));
    return out;
}

}  // namespace contin
