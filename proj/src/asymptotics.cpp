#include "vlab/asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vlab {
namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Integer powers by repeated multiplication so a negative base (log log N for
// tiny N under allow_small) still gives a well-defined value.
long double ipow(long double base, int k) {
    long double r = 1.0L;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

void check_slots(const std::vector<u64>& v, const char* who) {
    if (v.size() < 2) throw std::invalid_argument(std::string(who) + ": need at least 2 slots");
    for (u64 x : v)
        if (x < 1) throw std::invalid_argument(std::string(who) + ": coefficients must be positive");
}

}  // namespace

double almost_prime_main_term(u64 n, const std::vector<u64>& c, const std::vector<int>& r, double sseries,
                              bool allow_small) {
    check_slots(c, "almost_prime_main_term");
    if (r.size() != c.size()) throw std::invalid_argument("almost_prime_main_term: c and r lengths differ");
    for (int ri : r)
        if (ri < 1) throw std::invalid_argument("almost_prime_main_term: Omega targets must be >= 1");
    if (n <= 20 && !allow_small)
        throw std::domain_error("almost_prime_main_term: asymptotic not valid for N <= 20 (pass allow_small to force)");
    if (n < 3) throw std::invalid_argument("almost_prime_main_term: N must be >= 3");

    const int m = static_cast<int>(c.size());
    int r_excess = -m;
    for (int ri : r) r_excess += ri;

    const long double logn = std::log(static_cast<long double>(n));
    const long double loglogn = std::log(logn);
    long double value = static_cast<long double>(sseries) / factorial(m - 1);
    for (int ri : r) value /= factorial(ri - 1);
    for (u64 ci : c) value /= static_cast<long double>(ci);
    value *= ipow(static_cast<long double>(n), m - 1) / ipow(logn, m);
    value *= ipow(loglogn, r_excess);
    return static_cast<double>(value);
}

double weighted_main_term(u64 n, const std::vector<u64>& b, double sseries, WeightKind w) {
    check_slots(b, "weighted_main_term");
    if (n < 2) throw std::invalid_argument("weighted_main_term: N must be >= 2");
    const int m = static_cast<int>(b.size());
    long double value = static_cast<long double>(sseries) * ipow(static_cast<long double>(n), m - 1) /
                        factorial(m - 1);
    for (u64 bi : b) value /= static_cast<long double>(bi);
    if (w == WeightKind::prime_indicator || w == WeightKind::omega_indicator) {
        for (u64 bi : b) {
            if (bi >= n)
                throw std::invalid_argument("weighted_main_term: indicator variant needs every b_i < N");
            value /= std::log(static_cast<long double>(n) / static_cast<long double>(bi));
        }
    }
    return static_cast<double>(value);
}

double landau_main_term(double x, int k) {
    if (!(x >= 3.0)) throw std::invalid_argument("landau_main_term: x must be >= 3");
    if (k < 1) throw std::invalid_argument("landau_main_term: k must be >= 1");
    const long double logx = std::log(static_cast<long double>(x));
    return static_cast<double>(static_cast<long double>(x) * ipow(std::log(logx), k - 1) /
                               (factorial(k - 1) * logx));
}

double denumerant_main_term(u64 n, const std::vector<u64>& b) {
    check_slots(b, "denumerant_main_term");
    if (n < 1) throw std::invalid_argument("denumerant_main_term: N must be >= 1");
    const int m = static_cast<int>(b.size());
    long double value = ipow(static_cast<long double>(n), m - 1) / factorial(m - 1);
    for (u64 bi : b) value /= static_cast<long double>(bi);
    return static_cast<double>(value);
}

PrimeLogSum prime_reciprocal_log_sum(const FactorSieve& sieve, double x, double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("prime_reciprocal_log_sum: delta must lie in (0, 1)");
    if (!(x >= 3.0)) throw std::invalid_argument("prime_reciprocal_log_sum: x must be >= 3");
    const double p_max = std::pow(x, delta);
    if (p_max > static_cast<double>(sieve.limit()))
        throw std::out_of_range("prime_reciprocal_log_sum: x^delta exceeds sieve limit");

    PrimeLogSum out;
    long double sum = 0.0L;
    sieve.for_each_prime(static_cast<u64>(p_max), [&](u64 p) {
        sum += 1.0L / (static_cast<long double>(p) *
                       std::log(static_cast<long double>(x) / static_cast<long double>(p)));
    });
    out.exact = static_cast<double>(sum);
    const long double logx = std::log(static_cast<long double>(x));
    out.asymptotic = static_cast<double>(std::log(logx) / logx);
    return out;
}

double mertens_sum(const FactorSieve& sieve, u64 lo, u64 hi) {
    if (lo > hi) throw std::invalid_argument("mertens_sum: need lo <= hi");
    if (hi > sieve.limit()) throw std::out_of_range("mertens_sum: hi exceeds sieve limit");
    long double sum = 0.0L;
    sieve.for_each_prime(hi, [&](u64 p) {
        if (p > lo) sum += 1.0L / static_cast<long double>(p);
    });
    return static_cast<double>(sum);
}

double representation_count_upper_bound(u64 n, const std::vector<u64>& b) {
    check_slots(b, "representation_count_upper_bound");
    const int m = static_cast<int>(b.size());
    long double value = ipow(static_cast<long double>(n), m - 1);
    for (u64 bi : b) {
        if (bi >= n)
            throw std::invalid_argument("representation_count_upper_bound: every b_i must be < N");
        value /= static_cast<long double>(bi) * std::log(static_cast<long double>(n) / static_cast<long double>(bi));
    }
    return static_cast<double>(value);
}

}  // namespace vlab
