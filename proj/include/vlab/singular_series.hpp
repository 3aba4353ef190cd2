#pragma once

#include <string>
#include <vector>

#include "vlab/common.hpp"

namespace vlab {

enum class SeriesForm { euler_product, q_partial_sum };

struct SingularSeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;  // rigorous bound on the truncated remainder
    SeriesForm form = SeriesForm::euler_product;
    u64 cutoff = 0;  // prime cutoff P or modulus cutoff Q
    bool vanishes = false;
};

// Outcome of the exact vanishing test: the density is zero iff the parity
// condition fails or some coefficient, with slot i replaced by N, shares a
// common factor.
struct VanishingReport {
    bool vanishes = false;
    bool parity_ok = false;
    std::vector<u64> replaced_gcds;     // gcd(c_1..N..c_m) with N at slot i
    std::size_t failing_gcd_index = 0;  // 1-based, 0 when all gcds are 1

    std::string reason() const;
};

// c_q(n) = sum over a in [1,q], gcd(a,q)=1 of e(an/q), computed through the
// divisor form sum_{d | gcd(q,n)} d * mu(q/d).  n may be any integer.
i64 ramanujan_sum(u64 q, i64 n);

// Local density factor at a prime p for the instance (n, c):
//   p | n :  1 + (-1)^k / (p-1)^(k-1)
//   p ∤ n :  1 - (-1)^k / (p-1)^k
// where k = #{ i : p ∤ c_i }.  Throws if p is not prime.
double local_factor(u64 p, u64 n, const std::vector<u64>& c);

// Product of local factors over primes p <= p_cutoff, with a rigorous bound
// on the neglected tail.  Requires at least 3 slots, gcd(c) = 1, and
// p_cutoff >= max(2, max(c)) so every skipped prime divides no c_i.
SingularSeriesValue singular_series_product(u64 n, const std::vector<u64>& c, u64 p_cutoff);

// Partial sum over moduli q <= q_cutoff of c_q(n) * prod_i mu(q_i)/phi(q_i)
// with q_i = q / gcd(c_i, q).  Tail bound is finite for >= 3 slots.  When the
// vanishing criterion fires the series is identically zero, so the truncation
// reports value 0 with tail 0 instead of the raw (cancelling) partial sum.
SingularSeriesValue singular_series_partial(u64 n, const std::vector<u64>& c, u64 q_cutoff);

// Exact zero test for the density; requires gcd(c) = 1.
VanishingReport vanishing_criterion(u64 n, const std::vector<u64>& c);

}  // namespace vlab
