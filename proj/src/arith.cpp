#include "vlab/arith.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace vlab {

FactorSieve::FactorSieve(u64 limit, u64 max_entries) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("FactorSieve: limit must be >= 2, got " + std::to_string(limit));
    if (limit > std::numeric_limits<u32>::max())
        throw resource_limit_error("FactorSieve: limit " + std::to_string(limit) + " exceeds 32-bit spf storage");
    if (limit + 1 > max_entries)
        throw resource_limit_error("FactorSieve: limit " + std::to_string(limit) + " needs " +
                                   std::to_string(limit + 1) + " entries, budget is " + std::to_string(max_entries));
    spf_.assign(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (u64 j = i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<u32>(i);
    }
}

void FactorSieve::check_range(u64 n) const {
    if (n > limit_)
        throw std::out_of_range("FactorSieve: " + std::to_string(n) + " exceeds sieve limit " + std::to_string(limit_));
}

u32 FactorSieve::spf(u64 n) const {
    check_range(n);
    if (n < 2) throw std::invalid_argument("FactorSieve::spf: n must be >= 2");
    return spf_[n];
}

ArithProfile FactorSieve::classify(u64 n) const {
    check_range(n);
    if (n == 0) throw std::invalid_argument("FactorSieve::classify: n must be >= 1");
    ArithProfile r;
    r.n = n;
    r.moebius = 1;
    r.totient = 1;
    if (n == 1) return r;

    u64 m = n;
    u32 first_p = spf_[m];
    while (m > 1) {
        u32 p = spf_[m];
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        r.big_omega += e;
        r.small_omega += 1;
        r.totient *= (p - 1);
        for (int i = 1; i < e; ++i) r.totient *= p;
        r.moebius = (e > 1) ? 0 : -r.moebius;
    }
    r.is_prime = (r.big_omega == 1);
    if (r.small_omega == 1) r.von_mangoldt = std::log(static_cast<double>(first_p));
    if (r.is_prime) r.theta = std::log(static_cast<double>(n));
    return r;
}

int FactorSieve::big_omega(u64 n) const {
    check_range(n);
    if (n == 0) throw std::invalid_argument("FactorSieve::big_omega: n must be >= 1");
    int k = 0;
    for (u64 m = n; m > 1; m /= spf_[m]) ++k;
    return k;
}

int FactorSieve::small_omega(u64 n) const { return classify(n).small_omega; }

int FactorSieve::moebius(u64 n) const { return classify(n).moebius; }

u64 FactorSieve::totient(u64 n) const { return classify(n).totient; }

double FactorSieve::von_mangoldt(u64 n) const { return classify(n).von_mangoldt; }

u64 FactorSieve::count_omega_equals(u64 x, int k) const {
    check_range(x);
    if (k < 0) throw std::invalid_argument("count_omega_equals: k must be >= 0");
    u64 count = (k == 0 && x >= 1) ? 1 : 0;  // n = 1
    for (u64 n = 2; n <= x; ++n)
        if (big_omega(n) == k) ++count;
    return count;
}

std::vector<u64> FactorSieve::primes_up_to(u64 x) const {
    std::vector<u64> ps;
    for_each_prime(x, [&](u64 p) { ps.push_back(p); });
    return ps;
}

FactorSieve build_factor_sieve(u64 limit, u64 max_entries) { return FactorSieve(limit, max_entries); }

}  // namespace vlab
