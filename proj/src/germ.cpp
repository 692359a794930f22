#include "contin/germ.hpp"

#include <cmath>
#include <limits>

namespace contin {

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms = 0.0;
};

LineFit ls_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    LineFit f;
    std::size_t n = xs.size();
    if (n == 0) return f;
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
    f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    f.intercept = my - f.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = ys[i] - (f.intercept + f.slope * xs[i]);
        ss += r * r;
    }
    f.rms = std::sqrt(ss / static_cast<double>(n));
    return f;
}

}  // namespace

RadiusEstimate estimate_radius(const Germ& g) {
    int N = g.order();
    if (N < 8)
        throw Error(ErrorCode::InsufficientOrder,
                    "radius estimate needs order >= 8");
    std::vector<double> xs, ys_mag;
    for (int k = 0; k <= N; ++k) {
        double m = std::abs(g.coeffs[static_cast<std::size_t>(k)]);
        if (m > 0.0) {
            xs.push_back(static_cast<double>(k));
            ys_mag.push_back(m);
        }
    }
    std::size_t want = static_cast<std::size_t>(std::max(8, N / 2));
    if (xs.size() > want) {
        xs.erase(xs.begin(), xs.end() - static_cast<std::ptrdiff_t>(want));
        ys_mag.erase(ys_mag.begin(),
                     ys_mag.end() - static_cast<std::ptrdiff_t>(want));
    }
    RadiusEstimate est;
    est.window = static_cast<int>(xs.size());
    bool all_tiny = true;
    for (double m : ys_mag)
        if (m >= 1e-300) all_tiny = false;
    if (xs.size() < 2 || all_tiny) {
        est.value = std::numeric_limits<double>::infinity();
        est.confidence = 0.0;
        return est;
    }
    std::vector<double> ys(ys_mag.size());
    for (std::size_t i = 0; i < ys_mag.size(); ++i) ys[i] = std::log(ys_mag[i]);
    LineFit whole = ls_fit(xs, ys);
    std::size_t h = xs.size() / 2;
    std::vector<double> x1(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(h));
    std::vector<double> y1(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(h));
    std::vector<double> x2(xs.begin() + static_cast<std::ptrdiff_t>(h), xs.end());
    std::vector<double> y2(ys.begin() + static_cast<std::ptrdiff_t>(h), ys.end());
    double b1 = ls_fit(x1, y1).slope;
    double b2 = ls_fit(x2, y2).slope;
    est.confidence = 1.0 / (1.0 + whole.rms);
    // sustained decay that keeps steepening reads as "entire"
    if (b1 <= -1.0 && b2 - b1 <= -0.25) {
        est.value = std::numeric_limits<double>::infinity();
        return est;
    }
    double beta = std::max(whole.slope, std::max(b1, b2));
    est.value = std::exp(-beta);
    return est;
}

Cx eval_germ(const Germ& g, Cx z, bool unsafe) {
    if (g.coeffs.empty())
        throw Error(ErrorCode::DegenerateOrder, "empty germ");
    Cx d = z - g.center;
    if (!unsafe && g.order() >= 8) {
        double R = estimate_radius(g).value;
        if (std::isfinite(R) && std::abs(d) >= 0.95 * R)
            throw Error(ErrorCode::OutOfDisk,
                        "evaluation point outside 0.95 * estimated radius");
    }
    Cx acc = g.coeffs.back();
    for (std::size_t k = g.coeffs.size() - 1; k-- > 0;)
        acc = acc * d + g.coeffs[k];
    return acc;
}

Germ derivative_germ(const Germ& g) {
    if (g.order() < 1)
        throw Error(ErrorCode::DegenerateOrder,
                    "derivative needs order >= 1");
    Germ out;
    out.center = g.center;
    out.coeffs.resize(g.coeffs.size() - 1);
    for (std::size_t k = 0; k + 1 < g.coeffs.size(); ++k)
        out.coeffs[k] = static_cast<double>(k + 1) * g.coeffs[k + 1];
    return out;
}

Germ make_named_germ(const std::string& name, int order) {
    if (order < 8)
        throw Error(ErrorCode::DomainViolation, "named germs need order >= 8");
    std::size_t n = static_cast<std::size_t>(order);
    Germ g;
    if (name == "recip_two_minus_z") {
        // 1/(2 - z) at 0: a_k = 2^-(k+1)
        g.center = 0.0;
        g.coeffs.assign(1, Cx(0.5));
        for (std::size_t k = 1; k <= n; ++k)
            g.coeffs.push_back(g.coeffs.back() * 0.5);
        g.radius_hint = 2.0;
    } else if (name == "recip_two_minus_z_at_i") {
        // same function recentered: a_k = (2 - i)^-(k+1)
        g.center = Cx(0.0, 1.0);
        g.coeffs.assign(1, 1.0 / Cx(2.0, -1.0));
        for (std::size_t k = 1; k <= n; ++k)
            g.coeffs.push_back(g.coeffs.back() / Cx(2.0, -1.0));
        g.radius_hint = std::sqrt(5.0);
    } else if (name == "sqrt_at_one") {
        g.center = 1.0;
        g.coeffs.assign(1, Cx(1.0));
        for (int k = 1; k <= order; ++k)
            g.coeffs.push_back(g.coeffs.back() * (0.5 - (k - 1)) /
                               static_cast<double>(k));
        g.radius_hint = 1.0;
    } else if (name == "lacunary") {
        g.center = 0.0;
        g.coeffs.assign(n + 1, Cx(0.0));
        g.coeffs[0] = 1.0;
        for (std::size_t p = 2; p <= n; p *= 2) g.coeffs[p] = 1.0;
        g.radius_hint = 1.0;
    } else if (name == "log_at_one") {
        g.center = 1.0;
        g.coeffs.assign(n + 1, Cx(0.0));
        for (std::size_t k = 1; k <= n; ++k)
            g.coeffs[k] = (k % 2 ? 1.0 : -1.0) / static_cast<double>(k);
        g.radius_hint = 1.0;
    } else {
        throw Error(ErrorCode::DomainViolation, "unknown germ name: " + name);
    }
    return g;
}

}  // namespace contin
