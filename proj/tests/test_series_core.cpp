#include <cmath>
#include <limits>

#include "contin/germ.hpp"
#include "contin/io_json.hpp"
#include "contin/series_ops.hpp"
#include "doctest.h"

using namespace contin;

namespace {

bool is_inf(double v) { return std::isinf(v) && v > 0; }

Germ exp_germ(int order) {
    Germ g;
    g.center = 0.0;
    g.coeffs.assign(1, Cx(1.0));
    for (int k = 1; k <= order; ++k)
        g.coeffs.push_back(g.coeffs.back() / static_cast<double>(k));
    return g;
}

Germ ones_germ(int order) {
    Germ g;
    g.center = 0.0;
    g.coeffs.assign(static_cast<std::size_t>(order) + 1, Cx(1.0));
    return g;
}

}  // namespace

TEST_CASE("radius estimates of the stock germs at order 64") {
    CHECK(estimate_radius(make_named_germ("recip_two_minus_z", 64)).value ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(estimate_radius(make_named_germ("recip_two_minus_z_at_i", 64)).value ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(estimate_radius(make_named_germ("sqrt_at_one", 64)).value ==
          doctest::Approx(1.0271370661230446).epsilon(1e-9));
    CHECK(estimate_radius(ones_germ(64)).value == 1.0);
    CHECK(estimate_radius(ones_germ(64)).confidence == 1.0);
    CHECK(estimate_radius(make_named_germ("lacunary", 64)).value == 1.0);
    CHECK(is_inf(estimate_radius(exp_germ(64)).value));
    CHECK(estimate_radius(exp_germ(64)).confidence ==
          doctest::Approx(0.5585468317211867).epsilon(1e-9));
}

TEST_CASE("radius bands match the known singularity distances") {
    double r0 = estimate_radius(make_named_germ("recip_two_minus_z", 64)).value;
    CHECK(r0 >= 1.9);
    CHECK(r0 <= 2.1);
    double ri =
        estimate_radius(make_named_germ("recip_two_minus_z_at_i", 64)).value;
    CHECK(ri >= std::sqrt(5.0) * 0.95);
    CHECK(ri <= std::sqrt(5.0) * 1.05);
    double rs = estimate_radius(make_named_germ("sqrt_at_one", 64)).value;
    CHECK(rs >= 0.95);
    CHECK(rs <= 1.05);
}

TEST_CASE("estimator degenerate branches") {
    Germ zeros = ones_germ(10);
    for (auto& c : zeros.coeffs) c = 0.0;
    RadiusEstimate z = estimate_radius(zeros);
    CHECK(is_inf(z.value));
    CHECK(z.confidence == 0.0);

    Germ tiny = ones_germ(10);
    for (auto& c : tiny.coeffs) c = 1e-305;
    RadiusEstimate t = estimate_radius(tiny);
    CHECK(is_inf(t.value));
    CHECK(t.confidence == 0.0);

    CHECK_THROWS_AS(estimate_radius(ones_germ(4)), Error);
}

TEST_CASE("estimator is scale-equivariant") {
    Germ g = make_named_germ("recip_two_minus_z", 64);
    Germ h = g;
    for (std::size_t k = 0; k < h.coeffs.size(); ++k)
        h.coeffs[k] *= std::pow(2.0, static_cast<double>(k));
    double rg = estimate_radius(g).value;
    double rh = estimate_radius(h).value;
    double ratio = rg / rh;
    CHECK(ratio == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ratio >= 2.0 * 0.95);
    CHECK(ratio <= 2.0 * 1.05);
}

TEST_CASE("named germ coefficients are the exact closed forms") {
    Germ g = make_named_germ("recip_two_minus_z", 16);
    CHECK(g.coeffs[3] == Cx(0.0625));
    CHECK(g.coeffs[0] == Cx(0.5));
    CHECK(g.center == Cx(0.0));

    Germ s = make_named_germ("sqrt_at_one", 8);
    CHECK(s.coeffs[0] == Cx(1.0));
    CHECK(s.coeffs[1] == Cx(0.5));
    CHECK(s.coeffs[2] == Cx(-0.125));
    CHECK(s.coeffs[3].real() == doctest::Approx(0.0625).epsilon(1e-15));

    Germ l = make_named_germ("lacunary", 16);
    CHECK(l.coeffs[0] == Cx(1.0));
    CHECK(l.coeffs[2] == Cx(1.0));
    CHECK(l.coeffs[4] == Cx(1.0));
    CHECK(l.coeffs[8] == Cx(1.0));
    CHECK(l.coeffs[16] == Cx(1.0));
    CHECK(l.coeffs[3] == Cx(0.0));
    CHECK(l.coeffs[12] == Cx(0.0));

    CHECK_THROWS_AS(make_named_germ("no_such_germ", 16), Error);
    CHECK_THROWS_AS(make_named_germ("recip_two_minus_z", 4), Error);
}

TEST_CASE("evaluation honors the estimated disk") {
    Germ g = make_named_germ("recip_two_minus_z", 64);
    // truncation error at z=1 is ~2^-66
    CHECK(std::abs(eval_germ(g, Cx(1.0)) - Cx(1.0)) <= 1e-15);
    CHECK(std::abs(eval_germ(g, Cx(0.5)) - Cx(1.0 / 1.5)) <= 1e-15);
    CHECK_THROWS_AS(eval_germ(g, Cx(1.95)), Error);
    CHECK(std::isfinite(eval_germ(g, Cx(1.95), true).real()));
}

TEST_CASE("derivative germ agrees with a finite difference") {
    Germ g = make_named_germ("recip_two_minus_z", 64);
    Germ d = derivative_germ(g);
    CHECK(d.order() == g.order() - 1);
    Cx z(0.3, 0.1);
    double h = 1e-5;
    Cx fd = (eval_germ(g, z + Cx(h)) - eval_germ(g, z - Cx(h))) / (2.0 * h);
    CHECK(std::abs(eval_germ(d, z) - fd) <= 1e-6);
    // exact value: 1/(2-z)^2
    Cx exact = 1.0 / ((Cx(2.0) - z) * (Cx(2.0) - z));
    CHECK(std::abs(eval_germ(d, z) - exact) <= 1e-12);

    Germ constant;
    constant.center = 0.0;
    constant.coeffs = {Cx(3.0)};
    CHECK_THROWS_AS(derivative_germ(constant), Error);
}

TEST_CASE("series multiplication and division round-trip") {
    Series one_minus = {Cx(1.0), Cx(-1.0), Cx(0.0), Cx(0.0), Cx(0.0)};
    Series one_plus = {Cx(1.0), Cx(1.0), Cx(0.0), Cx(0.0), Cx(0.0)};
    Series prod = series_mul(one_minus, one_plus);
    CHECK(prod[0] == Cx(1.0));
    CHECK(prod[1] == Cx(0.0));
    CHECK(prod[2] == Cx(-1.0));
    CHECK(prod[3] == Cx(0.0));
    CHECK(prod[4] == Cx(0.0));

    Series a = {Cx(2.0, 1.0), Cx(0.5), Cx(-1.0, 0.25), Cx(0.125), Cx(1.0)};
    Series b = {Cx(1.0), Cx(0.25, -0.5), Cx(0.0, 0.125), Cx(-0.25), Cx(0.5)};
    Series back = series_mul(series_div(a, b), b);
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(std::abs(back[k] - a[k]) <= 1e-12);
}

TEST_CASE("composition with 1/(1-w) generates Fibonacci numbers") {
    int n = 12;
    Series geo(static_cast<std::size_t>(n) + 1, Cx(1.0));
    Series inner(static_cast<std::size_t>(n) + 1, Cx(0.0));
    inner[1] = 1.0;
    inner[2] = 1.0;
    Series fib = series_compose(geo, inner);
    double f0 = 1.0, f1 = 1.0;
    CHECK(std::abs(fib[0] - Cx(1.0)) <= 1e-12);
    CHECK(std::abs(fib[1] - Cx(1.0)) <= 1e-12);
    for (int k = 2; k <= n; ++k) {
        double f2 = f0 + f1;
        f0 = f1;
        f1 = f2;
        CHECK(std::abs(fib[static_cast<std::size_t>(k)] - Cx(f2)) <= 1e-9);
    }
}

TEST_CASE("compositional inverse of z + z^2 has Catalan coefficients") {
    Series f(13, Cx(0.0));
    f[1] = 1.0;
    f[2] = 1.0;
    Series phi = series_inverse(f);
    double catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
    for (std::size_t k = 1; k < phi.size(); ++k) {
        double expect = (k % 2 ? 1.0 : -1.0) * catalan[k - 1];
        CHECK(std::abs(phi[k] - Cx(expect)) <= 1e-7 * std::abs(expect));
    }
    Series id = series_compose(f, phi);
    CHECK(std::abs(id[0]) <= 1e-10);
    CHECK(std::abs(id[1] - Cx(1.0)) <= 1e-10);
    for (std::size_t k = 2; k < id.size(); ++k) CHECK(std::abs(id[k]) <= 1e-7);
}

TEST_CASE("germ JSON round-trips byte-exactly") {
    Germ g = make_named_germ("recip_two_minus_z_at_i", 24);
    std::string first = germ_to_json(g);
    Germ back = germ_from_json(first);
    CHECK(back.center == g.center);
    REQUIRE(back.coeffs.size() == g.coeffs.size());
    for (std::size_t k = 0; k < g.coeffs.size(); ++k)
        CHECK(back.coeffs[k] == g.coeffs[k]);
    CHECK(germ_to_json(back) == first);
}
