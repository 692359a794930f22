#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "contin/germ.hpp"
#include "contin/types.hpp"

namespace contin {

// Finite Blaschke products whose zeros come in tight pairs marching to the
// unit circle; the local inverse at each even-indexed zero covers a disk
// whose radius collapses, so no fixed covering radius survives the limit.

struct ZeroSequence {
    std::vector<Cx> points;
};

// a_{2n} = (1 - 2^-(n+2)) e^(i n alpha),  a_{2n+1} = a_{2n} + (1-|a_{2n}|)^2
// e^(i n alpha).  Validates |a| < 1 and the pair gap bound.
ZeroSequence make_pair_sequence(int n_pairs, double angle_step);

// B(z) = prod (z - a_k) / (1 - conj(a_k) z); requires |z| <= 1 (+1e-12).
Cx blaschke_eval(const ZeroSequence& zs, Cx z);

// B'(z) via the logarithmic derivative; at z within 1e-14 of a single zero
// the removable form is used.  MultipleZero if two zeros coincide there.
Cx blaschke_derivative(const ZeroSequence& zs, Cx z);

// Taylor germ of the local inverse of B at zero a_n (center B(a_n) = 0,
// natural coefficients).  MultipleZero when another zero lies within 1e-10
// of a_n; Overflow when deep-pair scaling pushes coefficients out of double
// range.  Internally the inverse is built in a doubly rescaled frame, which
// is also what koebe_bounds_report consumes.
Germ inverse_germ(const ZeroSequence& zs, std::size_t n, int order);

struct KoebeReport {
    std::size_t n = 0;
    Cx a_n;
    Cx deriv_B;              // B'(a_n)
    Cx deriv_f;              // f'(0) = 1 / B'(a_n)
    double gap = 0.0;        // |a_{n+1} - a_n|
    double r_n = 0.0;        // radius estimate of the inverse germ (value side)
    double bound_4_gap = 0.0;    // 4 |a_{n+1} - a_n|
    double bound_shrink = 0.0;   // 4 (1 - |a_n|)
    bool tri2_applicable = true;
    bool passes_tri2 = false;   // 4 gap >= r_n |f'(0)| (slack 1e-6 scale)
    bool passes_quatre2 = false; // r_n <= 4 (1 - |a_n|) (same slack)
    bool koebe_quarter_ok = false; // sampled quarter-theorem lower bound
    bool excludes_partner = false; // no sample of the covered disk hits a_{n+1}
};

// n must be even.  For a single-zero sequence the pair bounds are
// not applicable (tri2_applicable = false) and only the Koebe sampling runs.
KoebeReport koebe_bounds_report(const ZeroSequence& zs, std::size_t n,
                                int order = 48);

// Reports for n = 0, 2, ..., 2(n_pairs-1) of make_pair_sequence(n_pairs,
// angle_step); n_pairs <= 12.
std::vector<KoebeReport> covering_failure_demo(int n_pairs, int order = 48,
                                               double angle_step = 0.3);

}  // namespace contin
