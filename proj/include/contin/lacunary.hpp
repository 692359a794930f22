#pragma once

#include <cstdint>
#include <vector>

#include "contin/types.hpp"

namespace contin {

// h(z) = 1 + sum_{n>=1} z^(2^n), natural boundary on |z| = 1.

struct RadialProbeReport {
    std::uint64_t k = 0;  // direction numerator: angle 2*pi*k / 2^m
    int m = 0;            // telescoping depth
    Cx direction{1.0, 0.0};
    std::vector<double> radii;
    std::vector<Cx> values;     // h along the ray
    double growth_slope = 0.0;  // least-squares growth of |h| per step j
    bool blow_up_detected = false; // growth_slope >= 0.3
};

// Repeated squaring of the argument; stops when a term drops below tol.
Cx lacunary_eval(Cx z, double tol = 1e-15);

// h(z) via m unrollings of h(z) = z^2 + h(z^2):
// z^2 + z^4 + ... + z^(2^m) + h(z^(2^m)), m >= 1.
Cx telescoped_eval(Cx z, int m, double tol = 1e-15);

// Samples |h| at r_j = 1 - 2^-j, j = 4..m_max, along direction
// exp(2*pi*i*k/2^m), using telescoping depth m (m = 0 probes directly).
RadialProbeReport radial_probe(std::uint64_t k, int m, int m_max = 40);

// All dyadic directions k in [0, 2^m).
std::vector<RadialProbeReport> boundary_scan(int m, int m_max = 40);

}  // namespace contin
