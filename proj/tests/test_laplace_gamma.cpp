#include <cmath>
#include <complex>

#include "contin/gamma_fn.hpp"
#include "contin/germ.hpp"
#include "contin/laplace.hpp"
#include "contin/quad.hpp"
#include "doctest.h"

using namespace contin;

TEST_CASE("gamma at the classical checkpoints") {
    CHECK(std::abs(gamma_fn(Cx(1.0)) - Cx(1.0)) <= 1e-13);
    CHECK(std::abs(gamma_fn(Cx(6.0)) - Cx(120.0)) / 120.0 <= 1e-12);
    CHECK(std::abs(gamma_fn(Cx(0.5)) - Cx(std::sqrt(kPi))) <= 1e-13);
    // reflection branch
    CHECK(std::abs(gamma_fn(Cx(-0.5)) - Cx(-2.0 * std::sqrt(kPi))) <= 1e-12);
}

TEST_CASE("recurrence on and around the slanted contour") {
    Cx u = Cx(1.0) + Cx(1.0, 1.0) * 0.3;
    Cx lhs = gamma_fn(u + 1.0);
    CHECK(std::abs(lhs - u * gamma_fn(u)) / std::abs(lhs) <= 1e-10);

    // along the whole default line u = 1 + (1+i) t
    double worst = 0.0;
    for (int i = 0; i <= 48; ++i) {
        double t = -6.0 + 12.0 * i / 48.0;
        Cx v = Cx(1.0) + Cx(1.0, 1.0) * t;
        if (std::abs(v) < 1e-6) continue;
        Cx g1 = gamma_fn(v + 1.0);
        worst = std::max(worst,
                         std::abs(g1 - v * gamma_fn(v)) / std::abs(g1));
    }
    CHECK(worst <= 1e-10);  // frozen 5.98e-15
}

TEST_CASE("poles are rejected, not evaluated") {
    CHECK_THROWS_AS(gamma_fn(Cx(0.0)), Error);
    CHECK_THROWS_AS(gamma_fn(Cx(-3.0)), Error);
    CHECK_THROWS_AS(gamma_fn(Cx(-2.0, 1e-13)), Error);
    CHECK(is_finite(gamma_fn(Cx(-2.5))));
}

TEST_CASE("Stirling envelope 2/|u| holds on the modulus ladder") {
    double dev5 = stirling_check(Cx(5.0));
    double dev10 = stirling_check(10.0 * Cx(1.0, 1.0) / std::sqrt(2.0));
    double dev20 = stirling_check(Cx(20.0));
    double dev50 = stirling_check(Cx(50.0));
    CHECK(dev5 <= 2.0 / 5.0);
    CHECK(dev10 <= 0.2);
    CHECK(dev20 <= 0.1);
    CHECK(dev50 <= 2.0 / 50.0);
    CHECK(dev50 < dev5);  // asymptotic trend
    // frozen: 1.6782e-2, 8.3643e-3, 4.1747e-3, 1.6680e-3
    CHECK(dev5 == doctest::Approx(1.6782e-2).epsilon(1e-3));
    CHECK(dev50 == doctest::Approx(1.6680e-3).epsilon(1e-3));

    CHECK_THROWS_AS(stirling_check(Cx(2.0)), Error);           // |u| < 5
    CHECK_THROWS_AS(stirling_check(Cx(-10.0, 0.01)), Error);   // arg too close to pi
}

TEST_CASE("G at the frozen checkpoints") {
    Cx g0 = laplace_G(Cx(0.0));
    CHECK(g0.real() == doctest::Approx(-0.293676123149).epsilon(1e-8));
    CHECK(g0.imag() == doctest::Approx(2.68689552833).epsilon(1e-8));
    CHECK(std::abs(g0) > 1e-6);

    Cx gq = laplace_G(Cx(0.25));
    CHECK(gq.real() == doctest::Approx(0.771289652426).epsilon(1e-8));
    CHECK(gq.imag() == doctest::Approx(1.71561148056).epsilon(1e-8));
}

TEST_CASE("contour truncation is converged at the default extent") {
    ContourSpec narrow;
    narrow.half_extent = 3.0;
    Cx z(0.3, 0.1);
    CHECK(std::abs(laplace_G(z, narrow) - laplace_G(z)) <= 1e-8);  // 4.75e-15

    ContourSpec degenerate;
    degenerate.half_extent = 0.0;
    CHECK(laplace_G(z, degenerate) == Cx(0.0));

    CHECK_THROWS_AS(laplace_G(Cx(0.0, 3.0)), Error);  // outside the strip
}

TEST_CASE("derivative under the integral matches finite differences") {
    Cx z(0.3, 0.1);
    Cx dg = laplace_G_prime(z);
    double h = 1e-5;
    Cx fd = (laplace_G(z + Cx(h)) - laplace_G(z - Cx(h))) / (2.0 * h);
    CHECK(std::abs(dg - fd) / std::abs(dg) <= 1e-5);
    CHECK(is_finite(laplace_G_prime(Cx(0.0))));

    // degenerate weight: the zero integrand integrates to exactly zero
    QuadratureSpec q;
    CHECK(trapezoid_refine([](double) { return Cx(0.0); }, q).value == Cx(0.0));
}

TEST_CASE("functional equation G(z+1) = (1/2 pi i) e^(-2 pi i z) G'(z)") {
    std::vector<Cx> grid;
    for (double re : {0.0, 0.25, 0.5, 0.75, 1.0})
        for (double im : {-0.5, -0.25, 0.0, 0.25, 0.5})
            grid.push_back({re, im});
    std::vector<FunctionalEqReport> reports = verify_functional_equation(grid);
    REQUIRE(reports.size() == 25);
    double worst = 0.0;
    for (const FunctionalEqReport& r : reports) {
        CHECK(r.rel_residual <= 1e-6);
        worst = std::max(worst, r.rel_residual);
    }
    CHECK(worst <= 1e-8);  // frozen 3.90e-15
}

TEST_CASE("translating the contour does not move the integral") {
    CHECK(contour_translation_residual(Cx(0.3, 0.1)) <= 1e-8);  // 3.05e-15
    CHECK(contour_translation_residual(Cx(0.0)) <= 1e-8);
}

TEST_CASE("G is not a multiple of the trivial double-exponential solution") {
    CHECK(nontriviality_check(Cx(0.0), Cx(0.25)) > 1e-4);  // frozen 2.0927
    CHECK(nontriviality_check(Cx(0.0), Cx(0.5)) > 1e-4);   // frozen 3.6856
    CHECK(nontriviality_check(Cx(0.3), Cx(0.3)) == 0.0);
}

TEST_CASE("Taylor germ of G tracks the direct quadrature on a disk") {
    Germ g = laplace_germ(Cx(0.25), 16);
    CHECK(g.center == Cx(0.25));
    CHECK(g.order() == 16);
    double worst = 0.0;
    for (int s = 0; s < 8; ++s) {
        Cx z = Cx(0.25) + std::polar(0.2, 2.0 * kPi * s / 8.0);
        worst = std::max(worst,
                         std::abs(eval_germ(g, z, true) - laplace_G(z)));
    }
    CHECK(worst <= 1e-6);  // frozen 2.75e-13
}

TEST_CASE("integrand decay envelope is Gaussian-dominated") {
    DecayEnvelope env = decay_envelope(Cx(0.3, 0.1));
    CHECK(std::isfinite(env.A));
    CHECK(std::isfinite(env.B));
    CHECK(env.worst_violation <= 0.0);
    // at |t| >= 3 the -2 pi t^2 term overwhelms the fitted linear part
    for (double t : {3.0, 4.5, 6.0})
        CHECK(env.A * t + env.B - 2.0 * kPi * t * t < -20.0);
}
