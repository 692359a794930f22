#include "contin/lewy.hpp"

#include <cmath>

#include "contin/reduce.hpp"

namespace contin {

namespace {

// exp(-z e^w + i w^2 / (4 pi) + p w) with w = s - i theta; p = 1 for the
// value, p = 2 (negated outside) for the derivative.
Cx sector_integrand(double s, Cx z, double theta, double p) {
    Cx w(s, -theta);
    Cx ew = std::exp(w);
    return std::exp(-z * ew + Cx(0.0, 1.0) * w * w / (4.0 * kPi) + p * w);
}

}  // namespace

SectorEvaluation lewy_eval(Cx z, double theta, const QuadratureSpec& spec) {
    if (!((z * std::polar(1.0, -theta)).real() > 0.0))
        throw Error(ErrorCode::SectorViolation,
                    "z outside the sector of ray angle theta");
    QuadResult q = trapezoid_refine(
        [&](double s) { return sector_integrand(s, z, theta, 1.0); }, spec);
    return {theta, q.value, q.est_error};
}

SectorEvaluation lewy_derivative_direct(Cx z, const QuadratureSpec& spec) {
    if (!(z.real() > 0.0))
        throw Error(ErrorCode::SectorViolation,
                    "direct derivative needs Re z > 0");
    QuadResult q = trapezoid_refine(
        [&](double s) { return sector_integrand(s, z, 0.0, 2.0); }, spec);
    return {0.0, -q.value, q.est_error};
}

std::vector<SectorEvaluation> lewy_continue_loop(Cx z0, int n_steps,
                                                 const QuadratureSpec& spec) {
    if (!(z0.real() > 0.0))
        throw Error(ErrorCode::SectorViolation, "loop base needs Re z0 > 0");
    if (n_steps == 0) return {lewy_eval(z0, 0.0, spec)};
    if (n_steps < 5)
        throw Error(ErrorCode::DomainViolation, "loop needs n_steps >= 5");
    std::vector<SectorEvaluation> sectors;
    double r0 = std::abs(z0);
    for (int k = 0; k <= n_steps; ++k) {
        double theta = 2.0 * kPi * k / n_steps;
        Cx zk = z0 * std::polar(1.0, theta);
        sectors.push_back(lewy_eval(zk, theta, spec));
        if (k > 0) {
            // consecutive sectors must agree where both rays are valid
            double prev_theta = sectors[sectors.size() - 2].theta;
            double mid = 0.5 * (prev_theta + theta);
            Cx witness = r0 * std::polar(1.0, mid);
            Cx a = lewy_eval(witness, prev_theta, spec).value;
            Cx b = lewy_eval(witness, theta, spec).value;
            if (std::abs(a - b) >= 10.0 * spec.refine_tol)
                throw Error(ErrorCode::OverlapMismatch,
                            "sector evaluations disagree at witness point");
        }
    }
    return sectors;
}

double contour_shift_check(double R, double eta, Cx z, std::size_t n) {
    if (R <= 0.0 || eta < 0.0 || eta > kPi / 2.0)
        throw Error(ErrorCode::DomainViolation, "bad arc parameters");
    if (!(z.real() > 0.0) || !((z * std::polar(1.0, -eta)).real() > 0.0))
        throw Error(ErrorCode::DomainViolation,
                    "arc endpoints need Re z > 0 and Re(z e^(-i eta)) > 0");
    if (eta == 0.0 || n == 0) return 0.0;
    // L1 mass of exp(-z t + i (log t)^2/(4 pi)) on t = R e^(-i a), a: 0..eta
    Cx sum = blocked_sum(n + 1, [&](std::size_t i) {
        double w = (i == 0 || i == n) ? 0.5 : 1.0;
        double a = eta * static_cast<double>(i) / static_cast<double>(n);
        Cx t = R * std::polar(1.0, -a);
        Cx lg = std::log(t);
        double mag = (-z * t + Cx(0.0, 1.0) * lg * lg / (4.0 * kPi)).real();
        return Cx(w * std::exp(mag), 0.0);
    });
    return sum.real() * R * eta / static_cast<double>(n);
}

}  // namespace contin
