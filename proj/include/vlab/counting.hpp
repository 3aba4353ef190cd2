#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "vlab/arith.hpp"
#include "vlab/common.hpp"
#include "vlab/weights.hpp"

namespace vlab {

// One counting problem: solutions of N = c_1 n_1 + ... + c_m n_m in positive
// integers n_i with Omega(n_i) = r_i.
struct ProblemInstance {
    std::vector<u64> c;
    std::vector<int> r;
    u64 n = 0;

    ProblemInstance(std::vector<u64> c_in, std::vector<int> r_in, u64 n_in);

    std::size_t m() const { return c.size(); }
    u64 coefficient_gcd() const;

    // The asymptotic main-term formula is proved only for coprime
    // coefficients, at least three slots, and at least three slots forced to
    // be prime.
    bool theorem_valid() const;
};

enum class CountMethod { convolution, enumeration, dft };

struct CountResult {
    BigInt exact;
    double weighted = 0.0;
    ProblemInstance instance;
    CountMethod method = CountMethod::convolution;
};

struct WeightedSum {
    double value = 0.0;
    std::optional<BigInt> exact;  // present for 0/1 indicator weights
};

// exact[s], s <= n_max: weight entries of successive slot folds.  Indicator
// weights keep exact integers; Lambda/theta only the real column.
struct BatchCounts {
    u64 n_max = 0;
    WeightKind weight = WeightKind::omega_indicator;
    std::vector<u128> exact;
    std::vector<double> weighted;

    BigInt exact_at(u64 n) const;
    double value_at(u64 n) const;
};

// Solutions of N = b_1 n_1 + ... + b_m n_m in positive integers, no
// multiplicative constraint.  Exact for any size via bignum dynamic
// programming.
BigInt denumerant_exact(u64 n, const std::vector<u64>& b);

// Indicator array for one slot: entry[c*k] = 1 when Omega(k) = r, k >= 1,
// c*k <= n_max.  Length n_max + 1.
std::vector<u64> slot_indicator(const FactorSieve& sieve, u64 c, int r, u64 n_max);

// Real-weight version: entry[b*k] = w(k).  omega_indicator uses target r.
std::vector<double> slot_weight(const FactorSieve& sieve, u64 b, WeightKind w, u64 n_max, int r = 1);

// entry[s] = number of ordered r-tuples of primes with product s <= limit.
// For squarefree s with omega(s) = r this is r!; it vanishes unless
// Omega(s) = r.
std::vector<u64> count_ordered_prime_factorizations(const FactorSieve& sieve, u64 limit, int r);

// #{ (n_1..n_m) : N = sum c_i n_i, Omega(n_i) = r_i }, exact.
CountResult count_almost_prime(const FactorSieve& sieve, const ProblemInstance& inst);

// #{ (p_{1,1}..p_{m,r_m}) primes : N = sum c_i prod_j p_{i,j} }, exact; counts
// ordered prime tuples inside each slot.
CountResult count_prime_tuples(const FactorSieve& sieve, const ProblemInstance& inst);

// sum over N = sum b_i n_i (positive n_i) of prod_i w(n_i).  Indicator
// weights also produce the exact integer.  omega_indicator uses target 1.
WeightedSum weighted_representation_sum(const FactorSieve& sieve, u64 n, const std::vector<u64>& b,
                                        WeightKind w);

// All counts for N <= n_max in one pass of slot folds.  Entry N of the fold
// only reads slot entries <= N, so batch values equal per-N calls exactly.
BatchCounts batch_counts(const FactorSieve& sieve, const std::vector<u64>& c, const std::vector<int>& r,
                         u64 n_max, WeightKind w);

}  // namespace vlab
