#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contin/germ.hpp"
#include "contin/path.hpp"

namespace contin {

struct StepPolicy {
    double step_fraction = 0.4; // of the current radius estimate
    double min_step = 1e-6;     // below this the walk is declared stalled
    int order = 64;             // working truncation order
    double overlap_tol = 1e-8;
};

enum class TraceStatus { Completed, Stalled };

struct ContinuationTrace {
    std::vector<Germ> germs; // germs[0] is the input germ
    std::vector<Cx> step_points; // centers, one per germ (plotting convenience)
    TraceStatus status = TraceStatus::Completed;
    std::optional<Cx> stall_point;
};

struct MonodromyReport {
    ContinuationTrace trace;
    double distance_to_initial = 0.0;
    double distance_to_negated_initial = 0.0;
    std::string classification; // "identity" | "negation" | "other"
};

// Taylor recentering: b_k = sum_{n>=k} C(n,k) a_n d^{n-k} with d = q - center.
// Overflow when the binomial weights or the sums leave double range while
// nonzero source coefficients remain.  recenter() parallelizes over output
// indices (each inner sum stays serial, so results are bit-identical to the
// serial reference at any thread count).
Germ recenter(const Germ& g, Cx q, int order);
Germ recenter_serial(const Germ& g, Cx q, int order);

// Greedy walk along the sampled path: from each germ, advance to the furthest
// prefix-connected sample within step_fraction * estimate, recenter, repeat.
// Stalls (status, not an error) when progress would require a step below
// min_step.  The germ center must match the path start to 1e-12.
ContinuationTrace continue_along_path(const Germ& g, const PathSpec& path,
                                      const StepPolicy& policy);

// max_{k<=m} |a_k - b_k| / (1 + |a_k|); centers must agree to 1e-10.
double germ_distance(const Germ& a, const Germ& b, int m);

// Continuation around a closed loop plus classification of the return germ
// against the start germ through order min(16, order).  identity/negation
// require one distance <= policy.overlap_tol and the other >= 100x it.
MonodromyReport monodromy_loop(const Germ& g, const PathSpec& loop,
                               const StepPolicy& policy);

}  // namespace contin
