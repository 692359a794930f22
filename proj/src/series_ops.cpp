#include "contin/series_ops.hpp"

#include <algorithm>
#include <cmath>

namespace contin {

namespace {

std::size_t bit_length(std::size_t v) {
    std::size_t n = 0;
    while (v) {
        v >>= 1;
        ++n;
    }
    return n;
}

}  // namespace

Series series_mul(const Series& a, const Series& b) {
    std::size_t L = std::min(a.size(), b.size());
    Series out(L, Cx(0.0));
    for (std::size_t k = 0; k < L; ++k) {
        Cx s = 0.0;
        for (std::size_t j = 0; j <= k; ++j) s += a[j] * b[k - j];
        out[k] = s;
    }
    return out;
}

Series series_derivative(const Series& a) {
    if (a.size() <= 1) return Series(1, Cx(0.0));
    Series out(a.size() - 1);
    for (std::size_t k = 0; k + 1 < a.size(); ++k)
        out[k] = static_cast<double>(k + 1) * a[k + 1];
    return out;
}

Series series_div(const Series& a, const Series& b) {
    if (b.empty() || b[0] == Cx(0.0))
        throw Error(ErrorCode::DomainViolation,
                    "series division needs b[0] != 0");
    std::size_t L = std::min(a.size(), b.size());
    Series out(L);
    for (std::size_t k = 0; k < L; ++k) {
        Cx s = a[k];
        for (std::size_t j = 0; j < k; ++j) s -= out[j] * b[k - j];
        out[k] = s / b[0];
    }
    return out;
}

Series series_compose(const Series& a, const Series& b) {
    if (b.empty() || b[0] != Cx(0.0))
        throw Error(ErrorCode::DomainViolation,
                    "series composition needs b[0] == 0");
    std::size_t L = b.size();
    Series out(L, Cx(0.0));
    if (a.empty()) return out;
    out[0] = a.back();
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        out = series_mul(out, b);
        out[0] += a[k];
    }
    return out;
}

Series series_inverse(const Series& f) {
    if (f.size() < 2)
        throw Error(ErrorCode::DomainViolation, "inverse needs order >= 1");
    if (f[0] != Cx(0.0))
        throw Error(ErrorCode::DomainViolation, "inverse needs f[0] == 0");
    if (f[1] == Cx(0.0))
        throw Error(ErrorCode::MultipleZero, "inverse needs f[1] != 0");
    std::size_t L = f.size();
    Series id(L, Cx(0.0));
    id[1] = 1.0;
    Series fp = series_derivative(f);
    fp.resize(L, Cx(0.0));
    Series phi(L, Cx(0.0));
    phi[1] = 1.0 / f[1];
    // Newton doubles the number of correct coefficients per step
    std::size_t iters = bit_length(L - 1) + 2;
    for (std::size_t it = 0; it < iters; ++it) {
        Series res = series_compose(f, phi);
        for (std::size_t k = 0; k < L; ++k) res[k] -= id[k];
        Series den = series_compose(fp, phi);
        Series upd = series_div(res, den);
        for (std::size_t k = 0; k < L; ++k) phi[k] -= upd[k];
    }
    return phi;
}

}  // namespace contin
