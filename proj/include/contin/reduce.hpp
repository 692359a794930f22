#pragma once

#include <cstddef>
#include <vector>

#include "contin/types.hpp"

namespace contin {

// Deterministic compensated reduction.  Terms are grouped into fixed blocks
// of kReduceBlock; each block is Neumaier-summed serially, then the block
// partials are combined serially in index order.  The grouping is a function
// of the index only, so the parallel version (threads over whole blocks) is
// bit-identical to the serial one at any thread count.
inline constexpr std::size_t kReduceBlock = 1024;

struct NeumaierAcc {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

namespace detail {

template <class F>
Cx sum_block(F&& term, std::size_t lo, std::size_t hi) {
    NeumaierAcc re, im;
    for (std::size_t i = lo; i < hi; ++i) {
        Cx v = term(i);
        re.add(v.real());
        im.add(v.imag());
    }
    return {re.value(), im.value()};
}

}  // namespace detail

// term(i) is evaluated once for each i in [0, n)
template <class F>
Cx blocked_sum_serial(std::size_t n, F&& term) {
    std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
    NeumaierAcc re, im;
    for (std::size_t b = 0; b < nblocks; ++b) {
        std::size_t lo = b * kReduceBlock;
        std::size_t hi = lo + kReduceBlock < n ? lo + kReduceBlock : n;
        Cx p = detail::sum_block(term, lo, hi);
        re.add(p.real());
        im.add(p.imag());
    }
    return {re.value(), im.value()};
}

template <class F>
Cx blocked_sum(std::size_t n, F&& term) {
#ifdef _OPENMP
    std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
    if (nblocks < 4) return blocked_sum_serial(n, term);
    std::vector<Cx> partial(nblocks);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
        std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
        std::size_t hi = lo + kReduceBlock < n ? lo + kReduceBlock : n;
        partial[static_cast<std::size_t>(b)] = detail::sum_block(term, lo, hi);
    }
    NeumaierAcc re, im;
    for (Cx p : partial) {
        re.add(p.real());
        im.add(p.imag());
    }
    return {re.value(), im.value()};
#else
    return blocked_sum_serial(n, term);
#endif
}

}  // namespace contin
