#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "vlab/counting.hpp"

using namespace vlab;

namespace {

const FactorSieve& shared_sieve() {
    static FactorSieve sieve = build_factor_sieve(20'000);
    return sieve;
}

// Direct enumeration over all positive tuples with sum c . n = n, applying
// per-slot integer weights.
u64 brute_count(u64 n, const std::vector<u64>& c,
                const std::function<u64(std::size_t, u64)>& slot_weight_fn) {
    u64 total = 0;
    std::function<void(std::size_t, u64, u64)> walk = [&](std::size_t i, u64 rest, u64 acc) {
        if (i + 1 == c.size()) {
            if (rest % c[i] == 0 && rest >= c[i]) {
                const u64 w = slot_weight_fn(i, rest / c[i]);
                total += acc * w;
            }
            return;
        }
        for (u64 k = 1; c[i] * k < rest; ++k) {
            const u64 w = slot_weight_fn(i, k);
            if (w != 0) walk(i + 1, rest - c[i] * k, acc * w);
        }
    };
    walk(0, n, 1);
    return total;
}

u64 brute_almost(const FactorSieve& sieve, u64 n, const std::vector<u64>& c, const std::vector<int>& r) {
    return brute_count(n, c,
                       [&](std::size_t i, u64 k) { return sieve.big_omega(k) == r[i] ? u64{1} : u64{0}; });
}

// Ordered factorizations of k into exactly r primes, from the factorization:
// r! / prod e_i! when Omega(k) = r, else 0.
u64 ordered_factorizations(const FactorSieve& sieve, u64 k, int r) {
    std::vector<int> exps;
    u64 m = k;
    while (m > 1) {
        const u64 p = sieve.spf(m);
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        exps.push_back(e);
    }
    int omega = 0;
    for (int e : exps) omega += e;
    if (omega != r) return 0;
    u64 value = 1;
    for (int i = 2; i <= r; ++i) value *= i;
    for (int e : exps)
        for (int i = 2; i <= e; ++i) value /= i;
    return value;
}

BigInt binomial(u64 n, u64 k) {
    BigInt value = 1;
    for (u64 i = 0; i < k; ++i) {
        value *= n - i;
        value /= i + 1;
    }
    return value;
}

}  // namespace

TEST_CASE("problem instance validation and theorem flag") {
    CHECK_THROWS_AS(ProblemInstance({1}, {1}, 10), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance({1, 1, 1}, {1, 1}, 10), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance({1, 0, 1}, {1, 1, 1}, 10), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance({1, 1, 1}, {1, 0, 1}, 10), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance({1, 1, 1}, {1, 1, 1}, 0), std::invalid_argument);

    CHECK(ProblemInstance({1, 1, 1}, {1, 1, 1}, 9).theorem_valid());
    CHECK(ProblemInstance({1, 2, 3, 4}, {2, 1, 1, 1}, 30).theorem_valid());
    CHECK_FALSE(ProblemInstance({2, 4, 6}, {1, 1, 1}, 30).theorem_valid());
    CHECK_FALSE(ProblemInstance({1, 1, 1}, {2, 1, 1}, 30).theorem_valid());
    CHECK_FALSE(ProblemInstance({1, 1}, {1, 1}, 30).theorem_valid());
    CHECK(ProblemInstance({2, 3, 5}, {1, 1, 1}, 30).coefficient_gcd() == 1);
    CHECK(ProblemInstance({2, 4, 6}, {1, 1, 1}, 30).coefficient_gcd() == 2);
}

TEST_CASE("denumerant oracles and binomial identity") {
    CHECK(denumerant_exact(5, {1, 1}) == 4);
    CHECK(denumerant_exact(5, {1, 2}) == 2);
    CHECK(denumerant_exact(12, {2, 3}) == 1);
    CHECK(denumerant_exact(10, {1, 1, 1}) == 36);
    CHECK(denumerant_exact(2, {1, 1, 1}) == 0);

    for (u64 n = 1; n <= 1000; n += 13)
        for (std::size_t m : {2, 3, 4}) {
            const std::vector<u64> ones(m, 1);
            REQUIRE(denumerant_exact(n, ones) == (n >= m ? binomial(n - 1, m - 1) : BigInt(0)));
        }
}

TEST_CASE("slot arrays place weights at coefficient multiples") {
    const FactorSieve& sieve = shared_sieve();
    const std::vector<u64> ind = slot_indicator(sieve, 2, 1, 12);
    u64 nonzero = 0;
    for (u64 s = 0; s <= 12; ++s) nonzero += ind[s];
    CHECK(nonzero == 3);  // 2*2, 2*3, 2*5
    CHECK(ind[4] == 1);
    CHECK(ind[6] == 1);
    CHECK(ind[10] == 1);
    CHECK(ind[8] == 0);

    const std::vector<double> lam = slot_weight(sieve, 3, WeightKind::von_mangoldt, 30);
    CHECK(lam[12] == doctest::Approx(std::log(2.0)));  // 3 * 4
    CHECK(lam[21] == doctest::Approx(std::log(7.0)));
    CHECK(lam[18] == 0.0);  // 3 * 6
}

TEST_CASE("ordered prime factorization counts match the multinomial formula") {
    const FactorSieve& sieve = shared_sieve();
    for (int r = 1; r <= 4; ++r) {
        const std::vector<u64> table = count_ordered_prime_factorizations(sieve, 2000, r);
        for (u64 k = 1; k <= 2000; ++k) REQUIRE(table[k] == ordered_factorizations(sieve, k, r));
    }
}

TEST_CASE("almost prime counting oracles") {
    const FactorSieve& sieve = shared_sieve();
    CHECK(count_almost_prime(sieve, {{1, 1, 1}, {1, 1, 1}, 9}).exact == 4);
    CHECK(count_almost_prime(sieve, {{1, 1, 1}, {2, 1, 1}, 10}).exact == 2);
    CHECK(count_almost_prime(sieve, {{1, 1, 1}, {1, 1, 1}, 4}).exact == 0);
    CHECK(count_prime_tuples(sieve, {{1, 1, 1}, {2, 1, 1}, 10}).exact == 3);
    CHECK(count_prime_tuples(sieve, {{1, 1, 2}, {1, 1, 1}, 12}).exact == 3);
}

TEST_CASE("convolution counts equal direct enumeration on a small grid") {
    const FactorSieve& sieve = shared_sieve();
    const std::vector<std::vector<u64>> cs{{1, 1, 1}, {1, 2, 3}};
    const std::vector<std::vector<int>> rs{{1, 1, 1}, {2, 1, 1}};
    for (const auto& c : cs)
        for (const auto& r : rs)
            for (u64 n = 1; n <= 120; ++n) {
                const ProblemInstance inst(c, r, n);
                REQUIRE(count_almost_prime(sieve, inst).exact == brute_almost(sieve, n, c, r));
                const u64 tuples = brute_count(n, c, [&](std::size_t i, u64 k) {
                    return ordered_factorizations(sieve, k, r[i]);
                });
                REQUIRE(count_prime_tuples(sieve, inst).exact == tuples);
            }
}

TEST_CASE("prime tuples equal almost primes when every target is one") {
    const FactorSieve& sieve = shared_sieve();
    for (u64 n = 3; n <= 200; ++n) {
        const ProblemInstance inst({1, 1, 2}, {1, 1, 1}, n);
        REQUIRE(count_prime_tuples(sieve, inst).exact == count_almost_prime(sieve, inst).exact);
    }
}

TEST_CASE("slot permutation leaves counts unchanged") {
    const FactorSieve& sieve = shared_sieve();
    for (u64 n = 21; n <= 100; ++n) {
        const BigInt a = count_almost_prime(sieve, {{1, 2, 3}, {1, 1, 2}, n}).exact;
        const BigInt b = count_almost_prime(sieve, {{3, 2, 1}, {2, 1, 1}, n}).exact;
        REQUIRE(a == b);
    }
}

TEST_CASE("weighted representation sums match hand values") {
    const FactorSieve& sieve = shared_sieve();
    const WeightedSum prime6 = weighted_representation_sum(sieve, 6, {1, 1, 1}, WeightKind::prime_indicator);
    CHECK(prime6.value == 1.0);
    REQUIRE(prime6.exact.has_value());
    CHECK(*prime6.exact == 1);

    // 8 = 2+2+4 (3 orders) and 2+3+3 (3 orders).
    const double lambda8 = 3 * std::pow(std::log(2.0), 3) + 3 * std::log(2.0) * std::pow(std::log(3.0), 2);
    CHECK(weighted_representation_sum(sieve, 8, {1, 1, 1}, WeightKind::von_mangoldt).value ==
          doctest::Approx(lambda8).epsilon(1e-12));

    const double theta8 = 3 * std::log(2.0) * std::pow(std::log(3.0), 2);
    CHECK(weighted_representation_sum(sieve, 8, {1, 1, 1}, WeightKind::theta).value ==
          doctest::Approx(theta8).epsilon(1e-12));
}

TEST_CASE("theta sums never exceed lambda sums") {
    const FactorSieve& sieve = shared_sieve();
    for (u64 n = 6; n <= 300; n += 3) {
        const double lam = weighted_representation_sum(sieve, n, {1, 1, 1}, WeightKind::von_mangoldt).value;
        const double th = weighted_representation_sum(sieve, n, {1, 1, 1}, WeightKind::theta).value;
        REQUIRE(th <= lam + 1e-9);
    }
}

TEST_CASE("batch counts agree with per-target calls") {
    const FactorSieve& sieve = shared_sieve();
    const std::vector<u64> c{1, 1, 2};
    const std::vector<int> r{1, 2, 1};
    const BatchCounts batch = batch_counts(sieve, c, r, 400, WeightKind::omega_indicator);
    for (u64 n = 5; n <= 400; n += 7)
        REQUIRE(batch.exact_at(n) == count_almost_prime(sieve, {c, r, n}).exact);

    const BatchCounts lam = batch_counts(sieve, {1, 1, 1}, {1, 1, 1}, 400, WeightKind::von_mangoldt);
    for (u64 n = 3; n <= 400; n += 11) {
        const double direct = weighted_representation_sum(sieve, n, {1, 1, 1}, WeightKind::von_mangoldt).value;
        REQUIRE(lam.value_at(n) == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("batch totals count every tuple below the cap") {
    const FactorSieve& sieve = shared_sieve();
    const std::vector<u64> c{1, 2, 3};
    const std::vector<int> r{1, 1, 1};
    const BatchCounts batch = batch_counts(sieve, c, r, 50, WeightKind::omega_indicator);
    BigInt total = 0;
    for (u64 s = 0; s <= 50; ++s) total += batch.exact_at(s);

    BigInt direct = 0;
    for (u64 n = 1; n <= 50; ++n) direct += brute_almost(sieve, n, c, r);
    CHECK(total == direct);
}

TEST_CASE("counting rejects out-of-range targets") {
    const FactorSieve sieve(100);
    CHECK_THROWS_AS(count_almost_prime(sieve, {{1, 1, 1}, {1, 1, 1}, 101}), std::out_of_range);
    CHECK_THROWS_AS(weighted_representation_sum(sieve, 101, {1, 1, 1}, WeightKind::theta), std::out_of_range);
    CHECK_THROWS_AS(denumerant_exact(10, {}), std::invalid_argument);
    CHECK_THROWS_AS(denumerant_exact(10, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(batch_counts(sieve, {1}, {1}, 50, WeightKind::omega_indicator), std::invalid_argument);
}
