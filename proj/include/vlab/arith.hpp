#pragma once

#include <cstddef>
#include <vector>

#include "vlab/common.hpp"

namespace vlab {

// Multiplicative data for a single integer, read off a factor sieve.
struct ArithProfile {
    u64 n = 0;
    int big_omega = 0;    // Omega(n), prime factors with multiplicity
    int small_omega = 0;  // omega(n), distinct prime factors
    int moebius = 0;      // mu(n), 0 if n is not squarefree
    u64 totient = 0;      // phi(n)
    bool is_prime = false;
    double von_mangoldt = 0.0;  // log p if n = p^k, else 0
    double theta = 0.0;         // log n if n is prime, else 0
};

// Smallest-prime-factor table for [2, limit].  All per-integer queries
// walk the spf chain, so classification is O(Omega(n)) after the one-time
// O(limit log log limit) sieve.
class FactorSieve {
  public:
    static constexpr u64 kDefaultEntryBudget = 200'000'000;

    // Throws std::invalid_argument if limit < 2 and resource_limit_error if
    // the table would exceed max_entries entries.
    explicit FactorSieve(u64 limit, u64 max_entries = kDefaultEntryBudget);

    u64 limit() const { return limit_; }

    // Smallest prime factor of n, 2 <= n <= limit.
    u32 spf(u64 n) const;

    bool is_prime(u64 n) const { return n >= 2 && spf(n) == n; }

    // Full profile of n, 1 <= n <= limit.  classify(1) has Omega = omega = 0,
    // mu = phi = 1, Lambda = theta = 0 and is not prime.
    ArithProfile classify(u64 n) const;

    int big_omega(u64 n) const;
    int small_omega(u64 n) const;
    int moebius(u64 n) const;
    u64 totient(u64 n) const;
    double von_mangoldt(u64 n) const;

    // #{ n <= x : Omega(n) = k }, requires x <= limit and k >= 0.
    u64 count_omega_equals(u64 x, int k) const;

    // Calls fn(p) for each prime p <= x in increasing order, x <= limit.
    template <typename Fn>
    void for_each_prime(u64 x, Fn&& fn) const {
        check_range(x);
        for (u64 n = 2; n <= x; ++n)
            if (spf_[n] == n) fn(n);
    }

    std::vector<u64> primes_up_to(u64 x) const;

  private:
    void check_range(u64 n) const;

    u64 limit_;
    std::vector<u32> spf_;
};

FactorSieve build_factor_sieve(u64 limit, u64 max_entries = FactorSieve::kDefaultEntryBudget);

}  // namespace vlab
