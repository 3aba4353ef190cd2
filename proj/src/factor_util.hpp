#pragma once

#include <utility>
#include <vector>

#include "vlab/common.hpp"

// Trial-division helpers for small moduli (q, p_cutoff scale), shared by the
// series and circle translation units.  Sieve-backed code should prefer
// FactorSieve.

namespace vlab::detail {

inline std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> f;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline std::pair<int, u64> mu_phi(u64 n) {
    int mu = 1;
    u64 phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        mu = (e > 1) ? 0 : -mu;
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return {mu, phi};
}

inline int divisor_count(u64 n) {
    int d = 1;
    for (const auto& [p, e] : factorize(n)) d *= e + 1;
    return d;
}

inline bool is_prime_u64(u64 p) {
    if (p < 2) return false;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace vlab::detail
