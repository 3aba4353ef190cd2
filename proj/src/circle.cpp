#include "vlab/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "factor_util.hpp"

namespace vlab {
namespace {

constexpr long double kTau = 6.283185307179586476925286766559L;

long double fracl(long double x) { return x - std::floor(x); }

// e(x) with the phase reduced mod 1 in long double before sin/cos so that
// large n * alpha products keep full accuracy.
std::complex<long double> unit(long double phase) {
    const long double t = kTau * fracl(phase);
    return {std::cos(t), std::sin(t)};
}

void check_sieve_coverage(const FactorSieve& sieve, double upper, const char* who) {
    if (upper > static_cast<double>(sieve.limit()))
        throw std::out_of_range(std::string(who) + ": range exceeds sieve limit " + std::to_string(sieve.limit()));
}

}  // namespace

ArcConfig::ArcConfig(u64 n_in, double b_in) : n(n_in), b_exponent(b_in) {
    if (n < 3) throw std::invalid_argument("ArcConfig: N must be >= 3");
    if (!(b_exponent >= 0.0)) throw std::invalid_argument("ArcConfig: exponent must be >= 0");
    if (!(q_cutoff() < static_cast<double>(n) / 2.0))
        throw std::invalid_argument("ArcConfig: Q = " + std::to_string(q_cutoff()) +
                                    " leaves no minor arcs for N = " + std::to_string(n));
}

double ArcConfig::q_cutoff() const { return std::pow(std::log(static_cast<double>(n)), b_exponent); }

double ArcConfig::halfwidth() const { return q_cutoff() / static_cast<double>(n); }

ArcLabel classify_alpha(double alpha, const ArcConfig& config) {
    const long double a_frac = fracl(alpha);
    const u64 q_max = static_cast<u64>(config.q_cutoff());
    const long double width = config.halfwidth();

    for (u64 q = 1; q <= q_max; ++q) {
        long double best_dist = 2.0L;
        u64 best_a = 0;
        const long long k0 = std::llround(a_frac * static_cast<long double>(q));
        for (long long k = k0 - 1; k <= k0 + 1; ++k) {
            const long double dist = std::fabs(a_frac - static_cast<long double>(k) / q);
            if (dist > width) continue;
            u64 residue = static_cast<u64>(((k % static_cast<long long>(q)) + static_cast<long long>(q)) %
                                           static_cast<long long>(q));
            const u64 a = (residue == 0) ? q : residue;
            if (std::gcd(a, q) != 1) continue;
            if (dist < best_dist || (dist == best_dist && a < best_a)) {
                best_dist = dist;
                best_a = a;
            }
        }
        if (best_a != 0) {
            long double off = a_frac - static_cast<long double>(best_a) / q;
            off -= std::floor(off + 0.5L);  // wrap to [-1/2, 1/2)
            return {true, best_a, q, static_cast<double>(off)};
        }
    }
    return {false, 0, 0, 0.0};
}

std::complex<double> dirichlet_kernel(u64 n, u64 b, double y) {
    if (n < 1 || b < 1) throw std::invalid_argument("dirichlet_kernel: need N >= 1 and b >= 1");
    const u64 len = n / b;
    if (len == 0) return {0.0, 0.0};
    const long double t = fracl(static_cast<long double>(b) * y);
    if (t == 0.0L) return {static_cast<double>(len), 0.0};

    // sum_{k=1}^{L} e(kt) = e((L+1)t/2) sin(pi L t) / sin(pi t)
    const long double half_pi_t = kTau / 2.0L;
    const long double num = std::sin(half_pi_t * std::fmod(static_cast<long double>(len) * t, 2.0L));
    const long double den = std::sin(half_pi_t * t);
    const std::complex<long double> phase = unit(static_cast<long double>(len + 1) * t / 2.0L);
    return static_cast<std::complex<double>>(phase * (num / den));
}

std::complex<double> exp_sum(const FactorSieve& sieve, double x, double alpha, WeightKind w, u64 b, int r) {
    if (b < 1) throw std::invalid_argument("exp_sum: b must be >= 1");
    if (!(x >= 0.0)) throw std::invalid_argument("exp_sum: x must be nonnegative");
    check_sieve_coverage(sieve, x / static_cast<double>(b), "exp_sum");
    const u64 len = static_cast<u64>(x / static_cast<double>(b));
    const long double gamma = fracl(static_cast<long double>(b) * alpha);

    std::complex<long double> acc = 0.0L;
    switch (w) {
        case WeightKind::von_mangoldt:
            sieve.for_each_prime(len, [&](u64 p) {
                const long double logp = std::log(static_cast<long double>(p));
                for (u64 pk = p;; pk *= p) {
                    acc += logp * unit(static_cast<long double>(pk) * gamma);
                    if (pk > len / p) break;
                }
            });
            break;
        case WeightKind::theta:
            sieve.for_each_prime(len, [&](u64 p) {
                acc += std::log(static_cast<long double>(p)) * unit(static_cast<long double>(p) * gamma);
            });
            break;
        case WeightKind::prime_indicator:
            sieve.for_each_prime(len, [&](u64 p) { acc += unit(static_cast<long double>(p) * gamma); });
            break;
        case WeightKind::omega_indicator:
            for (u64 k = 1; k <= len; ++k)
                if (sieve.big_omega(k) == r) acc += unit(static_cast<long double>(k) * gamma);
            break;
    }
    return static_cast<std::complex<double>>(acc);
}

std::complex<double> major_arc_main_term(u64 n, u64 a, u64 q, double y, u64 b) {
    if (q < 1 || a < 1 || a > q) throw std::invalid_argument("major_arc_main_term: need 1 <= a <= q");
    if (std::gcd(a, q) != 1) throw std::invalid_argument("major_arc_main_term: gcd(a, q) must be 1");
    const u64 qb = q / std::gcd(b, q);
    const auto [mu, phi] = detail::mu_phi(qb);
    return (static_cast<double>(mu) / static_cast<double>(phi)) * dirichlet_kernel(n, b, y);
}

VaughanPieces vaughan_decompose(const FactorSieve& sieve, double x, double alpha, double u, double v) {
    if (!(x >= 4.0)) throw std::invalid_argument("vaughan_decompose: x must be >= 4");
    check_sieve_coverage(sieve, x, "vaughan_decompose");
    if (x > 2e7) throw resource_limit_error("vaughan_decompose: phase table for x > 2e7 not supported");
    if (u == 0.0 && v == 0.0) u = v = std::max(2.0, std::pow(x, 0.4));
    if (!(u >= 2.0) || !(v >= 2.0) || u > x || v > x)
        throw std::invalid_argument("vaughan_decompose: need 2 <= u, v <= x");

    const u64 xi = static_cast<u64>(x);
    const u64 ui = static_cast<u64>(u);
    const u64 vi = static_cast<u64>(v);

    // e(j alpha) for every product index that can appear.
    const long double af = fracl(alpha);
    std::vector<std::complex<double>> table(xi + 1);
    for (u64 j = 0; j <= xi; ++j)
        table[j] = static_cast<std::complex<double>>(unit(static_cast<long double>(j) * af));

    std::vector<double> lam(xi + 1, 0.0);
    sieve.for_each_prime(xi, [&](u64 p) {
        const double logp = std::log(static_cast<double>(p));
        for (u64 pk = p;; pk *= p) {
            lam[pk] = logp;
            if (pk > xi / p) break;
        }
    });

    std::vector<int> mu(std::max(ui, vi) + 1);
    for (u64 d = 1; d < mu.size(); ++d) mu[d] = sieve.moebius(d);

    VaughanPieces out;
    out.u = u;
    out.v = v;

    std::complex<long double> s1 = 0.0L;
    for (u64 d = 1; d <= ui; ++d) {
        if (mu[d] == 0) continue;
        std::complex<long double> inner = 0.0L;
        const u64 n_max = static_cast<u64>(x / static_cast<double>(d));
        for (u64 m = 1; m <= n_max; ++m)
            inner += std::log(static_cast<long double>(m)) * std::complex<long double>(table[m * d]);
        s1 += static_cast<long double>(mu[d]) * inner;
    }
    out.s_i1 = static_cast<std::complex<double>>(s1);

    std::complex<long double> s2 = 0.0L;
    for (u64 d = 1; d <= vi; ++d) {
        if (lam[d] == 0.0) continue;
        for (u64 del = 1; del <= ui; ++del) {
            if (mu[del] == 0) continue;
            const u64 step = d * del;
            if (step > xi) continue;
            std::complex<long double> inner = 0.0L;
            const u64 n_max = xi / step;
            for (u64 m = 1; m <= n_max; ++m) inner += std::complex<long double>(table[m * step]);
            s2 += static_cast<long double>(lam[d] * mu[del]) * inner;
        }
    }
    out.s_i2 = static_cast<std::complex<double>>(s2);

    // a(d) = sum_{delta <= U, delta | d} mu(delta), nonzero only past U.
    std::complex<long double> s3 = 0.0L;
    if (v < x) {
        const u64 d_max = static_cast<u64>(x / v);
        std::vector<int> coeff(d_max + 1, 0);
        for (u64 del = 1; del <= std::min(ui, d_max); ++del) {
            if (mu[del] == 0) continue;
            for (u64 d = del; d <= d_max; d += del) coeff[d] += mu[del];
        }
        for (u64 d = ui + 1; d <= d_max; ++d) {
            if (coeff[d] == 0) continue;
            std::complex<long double> inner = 0.0L;
            const u64 n_max = xi / d;
            for (u64 m = vi + 1; m <= n_max; ++m)
                if (lam[m] != 0.0)
                    inner += static_cast<long double>(lam[m]) * std::complex<long double>(table[m * d]);
            s3 += static_cast<long double>(coeff[d]) * inner;
        }
    }
    out.s_ii = static_cast<std::complex<double>>(s3);

    std::complex<long double> s0 = 0.0L;
    for (u64 m = 1; m <= vi; ++m)
        if (lam[m] != 0.0) s0 += static_cast<long double>(lam[m]) * std::complex<long double>(table[m]);
    out.s_0 = static_cast<std::complex<double>>(s0);

    return out;
}

MinSumCheck vaughan_min_sum(double x, double y, double alpha, u64 a, u64 q) {
    if (!(x >= 1.0) || !(y > 0.0)) throw std::invalid_argument("vaughan_min_sum: need X >= 1 and Y > 0");
    if (q < 1 || std::gcd(a, q) != 1) throw std::invalid_argument("vaughan_min_sum: need q >= 1, gcd(a, q) = 1");
    const long double diff = std::fabs(static_cast<long double>(alpha) -
                                       static_cast<long double>(a) / static_cast<long double>(q));
    if (diff > 1.0L / (static_cast<long double>(q) * q) + 1e-15L)
        throw std::invalid_argument("vaughan_min_sum: alpha is not a q^-2 rational approximation");

    const long double af = fracl(alpha);
    const long double xy = static_cast<long double>(x) * y;
    long double sum = 0.0L;
    const u64 len = static_cast<u64>(x);
    for (u64 m = 1; m <= len; ++m) {
        const long double ph = fracl(static_cast<long double>(m) * af);
        const long double dist = std::min(ph, 1.0L - ph);
        const long double cap = xy / static_cast<long double>(m);
        sum += (dist == 0.0L) ? cap : std::min(cap, 1.0L / dist);
    }

    MinSumCheck out;
    out.lhs = static_cast<double>(sum);
    out.rhs_bound = static_cast<double>((xy / q + x + q) * std::log(2.0L * x * q));
    return out;
}

double minor_arc_bound(u64 n, u64 q) {
    if (n < 3) throw std::invalid_argument("minor_arc_bound: N must be >= 3");
    if (q < 1 || q > n) throw std::invalid_argument("minor_arc_bound: need 1 <= q <= N");
    const double nd = static_cast<double>(n);
    const double qd = static_cast<double>(q);
    const double log4 = std::pow(std::log(nd), 4);
    return log4 * (nd / std::sqrt(qd) + std::pow(nd, 0.8) + std::sqrt(nd * qd));
}

double fourier_count(const FactorSieve& sieve, u64 n, const std::vector<u64>& b, WeightKind w) {
    if (b.size() < 2) throw std::invalid_argument("fourier_count: need at least 2 slots");
    if (n < 1) throw std::invalid_argument("fourier_count: N must be >= 1");
    check_sieve_coverage(sieve, static_cast<double>(n), "fourier_count");
    const u64 grid = static_cast<u64>(b.size()) * n + 1;
    if (grid > (u64{1} << 22))
        throw resource_limit_error("fourier_count: grid " + std::to_string(grid) + " exceeds 2^22 points");

    std::vector<std::complex<long double>> root(grid);
    for (u64 k = 0; k < grid; ++k) {
        const long double t = kTau * static_cast<long double>(k) / static_cast<long double>(grid);
        root[k] = {std::cos(t), std::sin(t)};
    }

    std::vector<std::complex<long double>> prod(grid, 1.0L);
    std::vector<std::complex<long double>> slot(grid);
    for (u64 bi : b) {
        if (bi < 1) throw std::invalid_argument("fourier_count: coefficients must be positive");
        std::fill(slot.begin(), slot.end(), std::complex<long double>(0.0L));
        for (u64 k = 1; k * bi <= n; ++k) {
            const long double wk = weight_value(sieve, k, w, 1);
            if (wk == 0.0L) continue;
            const u64 step = (k * bi) % grid;
            u64 idx = 0;
            for (u64 t = 0; t < grid; ++t) {
                slot[t] += wk * root[idx];
                idx += step;
                if (idx >= grid) idx -= grid;
            }
        }
        for (u64 t = 0; t < grid; ++t) prod[t] *= slot[t];
    }

    std::complex<long double> acc = 0.0L;
    const u64 step_n = n % grid;
    u64 idx = 0;
    for (u64 t = 0; t < grid; ++t) {
        acc += prod[t] * std::conj(root[idx]);
        idx += step_n;
        if (idx >= grid) idx -= grid;
    }
    return static_cast<double>(acc.real() / static_cast<long double>(grid));
}

}  // namespace vlab
