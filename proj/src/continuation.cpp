#include "contin/continuation.hpp"

#include <atomic>
#include <cmath>
#include <limits>

namespace contin {

namespace {

// b_k for one output index; returns false on weight/sum overflow
bool recenter_coeff(const std::vector<Cx>& a, Cx d, int k, int N, Cx* out) {
    Cx s = 0.0;
    Cx w = 1.0;  // C(n,k) d^(n-k), advanced incrementally in n
    for (int n = k; n <= N; ++n) {
        s += w * a[static_cast<std::size_t>(n)];
        w *= d * static_cast<double>(n + 1) / static_cast<double>(n + 1 - k);
        if (!(std::abs(w.real()) < 1e300 && std::abs(w.imag()) < 1e300)) {
            if (n < N && std::abs(a[static_cast<std::size_t>(n + 1)]) > 0.0)
                return false;
            break;
        }
    }
    if (!is_finite(s)) return false;
    *out = s;
    return true;
}

}  // namespace

Germ recenter_serial(const Germ& g, Cx q, int order) {
    int N = g.order();
    int M = order < N ? order : N;
    if (M < 0) throw Error(ErrorCode::DegenerateOrder, "empty germ");
    Cx d = q - g.center;
    Germ out;
    out.center = q;
    out.coeffs.resize(static_cast<std::size_t>(M) + 1);
    for (int k = 0; k <= M; ++k)
        if (!recenter_coeff(g.coeffs, d, k, N, &out.coeffs[static_cast<std::size_t>(k)]))
            throw Error(ErrorCode::Overflow, "recenter overflow");
    return out;
}

Germ recenter(const Germ& g, Cx q, int order) {
#ifdef _OPENMP
    int N = g.order();
    int M = order < N ? order : N;
    if (M < 0) throw Error(ErrorCode::DegenerateOrder, "empty germ");
    if (M < 32) return recenter_serial(g, q, order);
    Cx d = q - g.center;
    Germ out;
    out.center = q;
    out.coeffs.resize(static_cast<std::size_t>(M) + 1);
    std::atomic<bool> bad{false};
#pragma omp parallel for schedule(static)
    for (int k = 0; k <= M; ++k) {
        if (bad.load(std::memory_order_relaxed)) continue;
        if (!recenter_coeff(g.coeffs, d, k, N,
                            &out.coeffs[static_cast<std::size_t>(k)]))
            bad.store(true, std::memory_order_relaxed);
    }
    if (bad.load()) throw Error(ErrorCode::Overflow, "recenter overflow");
    return out;
#else
    return recenter_serial(g, q, order);
#endif
}

ContinuationTrace continue_along_path(const Germ& g, const PathSpec& path,
                                      const StepPolicy& policy) {
    if (std::abs(g.center - path_start(path)) > 1e-12)
        throw Error(ErrorCode::InvariantViolation,
                    "germ center does not match path start");
    std::vector<Cx> samples = sample_path(path);
    ContinuationTrace trace;
    trace.germs.push_back(g);
    trace.step_points.push_back(g.center);
    Cx c = g.center;
    std::size_t i = 0;
    int nstep = 0;
    while (i + 1 < samples.size()) {
        const Germ& cur = trace.germs.back();
        double R = estimate_radius(cur).value;
        double reach = std::isfinite(R)
                           ? policy.step_fraction * R
                           : std::numeric_limits<double>::infinity();
        // furthest sample reachable without skipping an unreachable one
        std::size_t j = i;
        while (j + 1 < samples.size() && std::abs(samples[j + 1] - c) <= reach)
            ++j;
        bool full = j > i;
        Cx target = full ? samples[j] : samples[i + 1];
        double rem = std::abs(target - c);
        double step = full ? rem : std::min(reach, rem);
        if (!full && step < policy.min_step) {
            trace.status = TraceStatus::Stalled;
            trace.stall_point = c;
            return trace;
        }
        for (;;) {
            Cx q = step >= rem ? target : c + (target - c) / rem * step;
            if (q == c) break;  // degenerate segment; just advance
            try {
                trace.germs.push_back(recenter(cur, q, policy.order));
                trace.step_points.push_back(q);
                break;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Overflow) throw;
                step *= 0.5;
                if (step < policy.min_step) {
                    trace.status = TraceStatus::Stalled;
                    trace.stall_point = c;
                    return trace;
                }
                full = false;
            }
        }
        c = trace.germs.back().center;
        if (full && step >= rem) i = j;
        if (++nstep > 4000)
            throw Error(ErrorCode::NoConvergence, "walk exceeded 4000 steps");
    }
    return trace;
}

double germ_distance(const Germ& a, const Germ& b, int m) {
    if (std::abs(a.center - b.center) > 1e-10)
        throw Error(ErrorCode::CenterMismatch,
                    "germ_distance requires matching centers");
    if (a.order() < m || b.order() < m)
        throw Error(ErrorCode::InsufficientOrder,
                    "germ_distance needs both orders >= m");
    double d = 0.0;
    for (int k = 0; k <= m; ++k) {
        std::size_t u = static_cast<std::size_t>(k);
        double dk = std::abs(a.coeffs[u] - b.coeffs[u]) /
                    (1.0 + std::abs(a.coeffs[u]));
        if (dk > d) d = dk;
    }
    return d;
}

MonodromyReport monodromy_loop(const Germ& g, const PathSpec& loop,
                               const StepPolicy& policy) {
    double tol = policy.overlap_tol;
    if (!path_closed(loop))
        throw Error(ErrorCode::InvariantViolation, "loop is not closed");
    ContinuationTrace trace = continue_along_path(g, loop, policy);
    if (trace.status == TraceStatus::Stalled)
        throw Error(ErrorCode::StalledLoop, "loop continuation stalled");
    MonodromyReport rep;
    const Germ& fin = trace.germs.back();
    int m = std::min(16, std::min(g.order(), fin.order()));
    rep.distance_to_initial = germ_distance(g, fin, m);
    Germ neg = g;
    for (Cx& v : neg.coeffs) v = -v;
    rep.distance_to_negated_initial = germ_distance(neg, fin, m);
    if (rep.distance_to_initial <= tol &&
        rep.distance_to_negated_initial >= 100.0 * tol)
        rep.classification = "identity";
    else if (rep.distance_to_negated_initial <= tol &&
             rep.distance_to_initial >= 100.0 * tol)
        rep.classification = "negation";
    else
        rep.classification = "other";
    rep.trace = std::move(trace);
    return rep;
}

}  // namespace contin
