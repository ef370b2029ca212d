#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace sc {

/// An upper bound on R(p, q): every graph on `value` vertices has a K_p or
/// an independent set of size q. `exact` marks tabulated Ramsey numbers.
struct RamseyBound {
    int p = 1;
    int q = 1;
    std::uint64_t value = 1;
    bool exact = true;
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Exact value for the known small cases (min(p,q) <= 2, R(3,3), R(3,4),
/// R(3,5), R(4,4)); otherwise the Erdos-Szekeres bound C(p+q-2, p-1).
inline RamseyBound ramsey_bound(int p, int q) {
    if (p < 1 || q < 1)
        throw Error(Errc::InvalidArgs, "Ramsey bound needs p, q >= 1, got (" + std::to_string(p) + "," +
                                           std::to_string(q) + ")");
    const int lo = std::min(p, q);
    const int hi = std::max(p, q);
    auto exact = [&](std::uint64_t v) { return RamseyBound{p, q, v, true}; };
    if (lo == 1) return exact(1);
    if (lo == 2) return exact(static_cast<std::uint64_t>(hi));
    if (lo == 3 && hi == 3) return exact(6);
    if (lo == 3 && hi == 4) return exact(9);
    if (lo == 3 && hi == 5) return exact(14);
    if (lo == 4 && hi == 4) return exact(18);
    return RamseyBound{p, q, binomial(static_cast<std::uint64_t>(p + q - 2), static_cast<std::uint64_t>(p - 1)),
                       false};
}

} // namespace sc
