#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "contin/continuation.hpp"
#include "contin/germ.hpp"
#include "contin/reduce.hpp"
#include "contin/rng.hpp"

using namespace contin;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(
               clock::now().time_since_epoch())
        .count();
}

bool bit_equal(Cx a, Cx b) {
    return std::memcmp(&a, &b, sizeof(Cx)) == 0;
}

void bench_blocked_sum(std::size_t n, int reps) {
    auto term = [](std::size_t i) -> Cx {
        double x = static_cast<double>(i) * 1e-6;
        return {std::cos(x) / (1.0 + x), std::sin(x) / (1.0 + x)};
    };

    Cx serial{}, parallel{};
    double t0 = now_ms();
    for (int r = 0; r < reps; ++r) serial = blocked_sum_serial(n, term);
    double t1 = now_ms();
    for (int r = 0; r < reps; ++r) parallel = blocked_sum(n, term);
    double t2 = now_ms();

    bool same = bit_equal(serial, parallel);
    std::printf("blocked_sum     n=%-9zu serial %8.2f ms  parallel %8.2f ms  "
                "speedup %5.2fx  bit-identical %s\n",
                n, (t1 - t0) / reps, (t2 - t1) / reps,
                (t1 - t0) / (t2 - t1 > 0 ? t2 - t1 : 1e-9),
                same ? "yes" : "NO");
    if (!same) std::exit(1);
}

void bench_recenter(int order, int reps) {
    Germ g;
    g.center = {0.0, 0.0};
    SplitMix64 rng(7);
    g.coeffs.resize(static_cast<std::size_t>(order) + 1);
    for (std::size_t k = 0; k < g.coeffs.size(); ++k) {
        // decaying like radius 2 so the recentering step stays well inside
        double mag = std::pow(0.5, static_cast<double>(k));
        g.coeffs[k] = {mag * (2.0 * rng.next_double() - 1.0),
                       mag * (2.0 * rng.next_double() - 1.0)};
    }
    Cx q{0.4, 0.3};

    Germ serial, parallel;
    double t0 = now_ms();
    for (int r = 0; r < reps; ++r) serial = recenter_serial(g, q, order);
    double t1 = now_ms();
    for (int r = 0; r < reps; ++r) parallel = recenter(g, q, order);
    double t2 = now_ms();

    bool same = serial.coeffs.size() == parallel.coeffs.size();
    for (std::size_t i = 0; same && i < serial.coeffs.size(); ++i)
        same = bit_equal(serial.coeffs[i], parallel.coeffs[i]);
    std::printf("recenter        ord=%-7d serial %8.2f ms  parallel %8.2f ms  "
                "speedup %5.2fx  bit-identical %s\n",
                order, (t1 - t0) / reps, (t2 - t1) / reps,
                (t1 - t0) / (t2 - t1 > 0 ? t2 - t1 : 1e-9),
                same ? "yes" : "NO");
    if (!same) std::exit(1);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif
    bench_blocked_sum(1u << 22, 5);
    bench_blocked_sum(1u << 18, 20);
    bench_recenter(2048, 3);
    bench_recenter(512, 20);
    std::printf("all parallel kernels bit-identical to serial reference\n");
    return 0;
}
