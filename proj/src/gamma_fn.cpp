#include "contin/gamma_fn.hpp"

#include <cmath>

namespace contin {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

Cx lanczos_half_plane(Cx u) {
    // valid for Re u >= 0.5
    u -= 1.0;
    Cx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (u + static_cast<double>(i));
    Cx t = u + (kLanczosG + 0.5);
    return std::sqrt(2.0 * kPi) * std::pow(t, u + 0.5) * std::exp(-t) * x;
}

}  // namespace

Cx gamma_fn(Cx u) {
    double nearest = std::round(u.real());
    if (nearest <= 0.0 && std::abs(u.real() - nearest) <= 1e-12 &&
        std::abs(u.imag()) <= 1e-12)
        throw Error(ErrorCode::PoleAtNonpositiveInteger,
                    "gamma pole at nonpositive integer");
    if (u.real() < 0.5) {
        // reflection: Gamma(u) Gamma(1-u) = pi / sin(pi u)
        return kPi / (std::sin(kPi * u) * lanczos_half_plane(1.0 - u));
    }
    return lanczos_half_plane(u);
}

double stirling_check(Cx u) {
    if (std::abs(u) < 5.0 || std::abs(std::arg(u)) >= kPi - 0.1)
        throw Error(ErrorCode::DomainViolation,
                    "stirling comparison needs |u| >= 5 away from the cut");
    Cx main = std::exp((u - 0.5) * std::log(u) - u +
                       0.5 * std::log(2.0 * kPi));
    Cx g = gamma_fn(u);
    return std::abs(g - main) / std::abs(g);
}

}  // namespace contin
