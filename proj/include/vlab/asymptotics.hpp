#pragma once

#include <string>
#include <vector>

#include "vlab/arith.hpp"
#include "vlab/common.hpp"
#include "vlab/weights.hpp"

namespace vlab {

// One line of an exact-vs-predicted comparison table.
struct ComparisonRow {
    u64 n = 0;
    BigInt exact;
    double weighted = 0.0;   // exact column as a real (equals exact for counts)
    double main_term = 0.0;
    double ratio = 0.0;      // weighted / main_term, 0 when the main term is 0
    double sseries = 0.0;
    std::string flags;       // "ok", "vanishes:...", or "invalid"
};

// Predicted count of solutions of N = sum c_i n_i with Omega(n_i) = r_i:
//   sseries * N^(m-1) (log log N)^(sum r - m) / ((m-1)! prod (r_i - 1)! prod c_i log^m N).
// Proved only for N > 20; allow_small evaluates anyway (N >= 3).
double almost_prime_main_term(u64 n, const std::vector<u64>& c, const std::vector<int>& r, double sseries,
                              bool allow_small = false);

// Predicted weighted sum over N = sum b_i n_i: sseries * N^(m-1) / ((m-1)! prod b_i)
// for Lambda or theta weights; indicator weights divide by prod log(N / b_i).
double weighted_main_term(u64 n, const std::vector<u64>& b, double sseries, WeightKind w);

// Predicted #{ n <= x : Omega(n) = k }: x (log log x)^(k-1) / ((k-1)! log x).
double landau_main_term(double x, int k);

// Predicted solution count with no multiplicative constraints:
// N^(m-1) / ((m-1)! prod b_i).
double denumerant_main_term(u64 n, const std::vector<u64>& b);

struct PrimeLogSum {
    double exact = 0.0;       // sum_{p <= x^delta} 1 / (p log(x/p))
    double asymptotic = 0.0;  // log log x / log x
};

// Partial-summation model for the innermost slot of the main-term analysis.
PrimeLogSum prime_reciprocal_log_sum(const FactorSieve& sieve, double x, double delta);

// sum_{lo < p <= hi} 1/p.
double mertens_sum(const FactorSieve& sieve, u64 lo, u64 hi);

// Crude upper bound N^(m-1) / (prod b_i prod log(N / b_i)); requires every
// b_i < N.
double representation_count_upper_bound(u64 n, const std::vector<u64>& b);

}  // namespace vlab
