#pragma once

#include <complex>
#include <vector>

#include "vlab/arith.hpp"
#include "vlab/common.hpp"
#include "vlab/weights.hpp"

namespace vlab {

// Farey dissection parameters: moduli up to Q = (log N)^B are major,
// everything else minor.  Arcs have halfwidth Q/N around each a/q.
struct ArcConfig {
    u64 n = 0;
    double b_exponent = 1.0;

    ArcConfig(u64 n_in, double b_in);

    double q_cutoff() const;    // Q = (log N)^B
    double halfwidth() const;   // Q / N
};

struct ArcLabel {
    bool major = false;
    u64 a = 0;       // numerator, 1 <= a <= q, gcd(a, q) = 1; 0 on minor arcs
    u64 q = 0;       // modulus; 0 on minor arcs
    double offset = 0.0;  // alpha - a/q wrapped to [-1/2, 1/2); 0 on minor arcs
};

// The four pieces of the prime-sum decomposition
//   S = s_i1 - s_i2 - s_ii + s_0
// where s_i1 sums mu(d) log(m) over d <= u (type I), s_i2 is the type I
// correction over products d * delta <= u v, s_ii is the bilinear range with
// both factors large (type II) and s_0 is the short initial segment n <= v.
// reconstructed() must match the direct sum over Lambda(n) e(n alpha).
struct VaughanPieces {
    std::complex<double> s_i1;
    std::complex<double> s_i2;
    std::complex<double> s_ii;
    std::complex<double> s_0;
    double u = 0.0;
    double v = 0.0;

    std::complex<double> reconstructed() const { return s_i1 - s_i2 - s_ii + s_0; }
};

struct MinSumCheck {
    double lhs = 0.0;        // sum_{n <= X} min(XY/n, 1 / ||n alpha||)
    double rhs_bound = 0.0;  // (XY/q + X + q) log(2Xq)
};

// Locates alpha (taken mod 1) in the dissection: returns the unique covering
// (a, q) with smallest q, or a minor label when no q <= Q covers it.
ArcLabel classify_alpha(double alpha, const ArcConfig& config);

// sum_{k <= N/b} e(k b y), evaluated in closed form.
std::complex<double> dirichlet_kernel(u64 n, u64 b, double y);

// sum_{k <= x/b} w(k) e(k b alpha).  omega_indicator uses Omega target r.
std::complex<double> exp_sum(const FactorSieve& sieve, double x, double alpha, WeightKind w, u64 b = 1,
                             int r = 1);

// Major-arc model of the Lambda-weighted sum at alpha = a/q + y:
//   mu(q') / phi(q') * dirichlet_kernel(N, b, y),  q' = q / gcd(b, q).
std::complex<double> major_arc_main_term(u64 n, u64 a, u64 q, double y, u64 b = 1);

// Splits sum_{n <= x} Lambda(n) e(n alpha) into the standard four ranges with
// smoothing parameters u, v (both >= 2).  Pass u = v = 0 for the default
// max(2, x^(2/5)).
VaughanPieces vaughan_decompose(const FactorSieve& sieve, double x, double alpha, double u = 0.0,
                                double v = 0.0);

// Rational-approximation bound for the harmonic min-sum; requires gcd(a,q)=1
// and |alpha - a/q| <= 1/q^2.
MinSumCheck vaughan_min_sum(double x, double y, double alpha, u64 a, u64 q);

// (log N)^4 (N / sqrt(q) + N^(4/5) + sqrt(N q)), the generic minor-arc
// estimate for denominators near q.
double minor_arc_bound(u64 n, u64 q);

// Exact discrete-circle evaluation of the weighted representation count:
// (1/M) sum_{t < M} prod_i S_i(t/M) e(-N t / M) with M = m N + 1.
double fourier_count(const FactorSieve& sieve, u64 n, const std::vector<u64>& b, WeightKind w);

}  // namespace vlab
