#include "vlab/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "vlab/convolution.hpp"

namespace vlab {
namespace {

void check_target(const FactorSieve& sieve, u64 n) {
    if (n < 1) throw std::invalid_argument("target N must be >= 1");
    if (n > sieve.limit())
        throw std::out_of_range("target N = " + std::to_string(n) + " exceeds sieve limit " +
                                std::to_string(sieve.limit()));
}

std::vector<u128> fold_exact(const std::vector<std::vector<u64>>& lists, u64 n_max) {
    std::vector<u128> acc(lists[0].begin(), lists[0].end());
    for (std::size_t i = 1; i < lists.size(); ++i) acc = convolve_exact(acc, lists[i], n_max + 1);
    return acc;
}

std::vector<double> fold_real(const std::vector<std::vector<double>>& lists, u64 n_max) {
    std::vector<double> acc = lists[0];
    for (std::size_t i = 1; i < lists.size(); ++i) acc = convolve_real(acc, lists[i], n_max + 1);
    return acc;
}

}  // namespace

ProblemInstance::ProblemInstance(std::vector<u64> c_in, std::vector<int> r_in, u64 n_in)
    : c(std::move(c_in)), r(std::move(r_in)), n(n_in) {
    if (c.size() < 2) throw std::invalid_argument("ProblemInstance: need at least 2 slots");
    if (r.size() != c.size())
        throw std::invalid_argument("ProblemInstance: c has " + std::to_string(c.size()) + " entries but r has " +
                                    std::to_string(r.size()));
    for (u64 ci : c)
        if (ci < 1) throw std::invalid_argument("ProblemInstance: coefficients must be positive");
    for (int ri : r)
        if (ri < 1) throw std::invalid_argument("ProblemInstance: Omega targets must be >= 1");
    if (n < 1) throw std::invalid_argument("ProblemInstance: target must be >= 1");
}

u64 ProblemInstance::coefficient_gcd() const {
    u64 g = 0;
    for (u64 ci : c) g = std::gcd(g, ci);
    return g;
}

bool ProblemInstance::theorem_valid() const {
    if (coefficient_gcd() != 1 || m() < 3) return false;
    std::size_t prime_slots = 0;
    for (int ri : r)
        if (ri == 1) ++prime_slots;
    return prime_slots >= 3;
}

BigInt BatchCounts::exact_at(u64 n) const {
    if (exact.empty()) throw std::logic_error("BatchCounts: no exact column for real weights");
    if (n > n_max) throw std::out_of_range("BatchCounts: N exceeds batch range");
    return u128_to_bigint(exact[n]);
}

double BatchCounts::value_at(u64 n) const {
    if (n > n_max) throw std::out_of_range("BatchCounts: N exceeds batch range");
    return weighted[n];
}

BigInt denumerant_exact(u64 n, const std::vector<u64>& b) {
    if (b.empty()) throw std::invalid_argument("denumerant_exact: need at least one coefficient");
    for (u64 bi : b)
        if (bi < 1) throw std::invalid_argument("denumerant_exact: coefficients must be positive");
    if (n < 1) throw std::invalid_argument("denumerant_exact: target must be >= 1");

    // Shift to nonnegative variables: n_i >= 1 becomes n_i' >= 0 with target
    // N - sum(b).
    u64 shift = 0;
    for (u64 bi : b) shift += bi;
    if (shift > n) return 0;
    const u64 t = n - shift;

    std::vector<BigInt> ways(t + 1, 0);
    ways[0] = 1;
    for (u64 bi : b)
        for (u64 s = bi; s <= t; ++s) ways[s] += ways[s - bi];
    return ways[t];
}

std::vector<u64> slot_indicator(const FactorSieve& sieve, u64 c, int r, u64 n_max) {
    check_target(sieve, n_max);
    if (c < 1) throw std::invalid_argument("slot_indicator: coefficient must be positive");
    if (r < 1) throw std::invalid_argument("slot_indicator: Omega target must be >= 1");
    std::vector<u64> v(n_max + 1, 0);
    for (u64 k = 1; c * k <= n_max; ++k)
        if (sieve.big_omega(k) == r) v[c * k] = 1;
    return v;
}

std::vector<double> slot_weight(const FactorSieve& sieve, u64 b, WeightKind w, u64 n_max, int r) {
    check_target(sieve, n_max);
    if (b < 1) throw std::invalid_argument("slot_weight: coefficient must be positive");
    std::vector<double> v(n_max + 1, 0.0);
    for (u64 k = 1; b * k <= n_max; ++k) v[b * k] = weight_value(sieve, k, w, r);
    return v;
}

std::vector<u64> count_ordered_prime_factorizations(const FactorSieve& sieve, u64 limit, int r) {
    check_target(sieve, limit);
    if (r < 1) throw std::invalid_argument("count_ordered_prime_factorizations: r must be >= 1");
    std::vector<u64> cur(limit + 1, 0);
    for (u64 p = 2; p <= limit; ++p)
        if (sieve.is_prime(p)) cur[p] = 1;
    for (int level = 2; level <= r; ++level) {
        std::vector<u64> next(limit + 1, 0);
        sieve.for_each_prime(limit, [&](u64 p) {
            for (u64 u = 1; p * u <= limit; ++u)
                if (cur[u] != 0) next[p * u] += cur[u];
        });
        cur = std::move(next);
    }
    return cur;
}

CountResult count_almost_prime(const FactorSieve& sieve, const ProblemInstance& inst) {
    check_target(sieve, inst.n);
    std::vector<std::vector<u64>> lists;
    lists.reserve(inst.m());
    for (std::size_t i = 0; i < inst.m(); ++i) lists.push_back(slot_indicator(sieve, inst.c[i], inst.r[i], inst.n));
    const std::vector<u128> folded = fold_exact(lists, inst.n);
    CountResult res{u128_to_bigint(folded[inst.n]), 0.0, inst, CountMethod::convolution};
    res.weighted = static_cast<double>(folded[inst.n]);
    return res;
}

CountResult count_prime_tuples(const FactorSieve& sieve, const ProblemInstance& inst) {
    check_target(sieve, inst.n);
    std::vector<std::vector<u64>> lists;
    lists.reserve(inst.m());
    for (std::size_t i = 0; i < inst.m(); ++i) {
        const u64 ci = inst.c[i];
        const u64 slot_max = inst.n / ci;
        std::vector<u64> list(inst.n + 1, 0);
        if (slot_max >= 1) {
            const std::vector<u64> tuples = count_ordered_prime_factorizations(sieve, slot_max, inst.r[i]);
            for (u64 s = 1; s <= slot_max; ++s) list[ci * s] = tuples[s];
        }
        lists.push_back(std::move(list));
    }
    const std::vector<u128> folded = fold_exact(lists, inst.n);
    CountResult res{u128_to_bigint(folded[inst.n]), 0.0, inst, CountMethod::convolution};
    res.weighted = static_cast<double>(folded[inst.n]);
    return res;
}

WeightedSum weighted_representation_sum(const FactorSieve& sieve, u64 n, const std::vector<u64>& b,
                                        WeightKind w) {
    check_target(sieve, n);
    if (b.size() < 2) throw std::invalid_argument("weighted_representation_sum: need at least 2 slots");
    WeightedSum res;
    if (w == WeightKind::omega_indicator || w == WeightKind::prime_indicator) {
        std::vector<std::vector<u64>> lists;
        for (u64 bi : b) lists.push_back(slot_indicator(sieve, bi, 1, n));
        const std::vector<u128> folded = fold_exact(lists, n);
        res.exact = u128_to_bigint(folded[n]);
        res.value = static_cast<double>(folded[n]);
        return res;
    }
    std::vector<std::vector<double>> lists;
    for (u64 bi : b) lists.push_back(slot_weight(sieve, bi, w, n));
    res.value = fold_real(lists, n)[n];
    return res;
}

BatchCounts batch_counts(const FactorSieve& sieve, const std::vector<u64>& c, const std::vector<int>& r,
                         u64 n_max, WeightKind w) {
    check_target(sieve, n_max);
    if (c.size() < 2 || c.size() != r.size())
        throw std::invalid_argument("batch_counts: need >= 2 slots and matching c/r lengths");
    BatchCounts batch;
    batch.n_max = n_max;
    batch.weight = w;
    if (w == WeightKind::omega_indicator || w == WeightKind::prime_indicator) {
        std::vector<std::vector<u64>> lists;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int target = (w == WeightKind::omega_indicator) ? r[i] : 1;
            lists.push_back(slot_indicator(sieve, c[i], target, n_max));
        }
        batch.exact = fold_exact(lists, n_max);
        batch.weighted.resize(n_max + 1);
        for (u64 s = 0; s <= n_max; ++s) batch.weighted[s] = static_cast<double>(batch.exact[s]);
        return batch;
    }
    std::vector<std::vector<double>> lists;
    for (std::size_t i = 0; i < c.size(); ++i) lists.push_back(slot_weight(sieve, c[i], w, n_max, r[i]));
    batch.weighted = fold_real(lists, n_max);
    return batch;
}

}  // namespace vlab
