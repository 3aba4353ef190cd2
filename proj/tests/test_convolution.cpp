#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "vlab/convolution.hpp"

using namespace vlab;

namespace {

// (1^n * 1^n)[s] counts pairs i + j = s with 0 <= i, j < n.
u64 pair_count(u64 s, u64 n) {
    if (s >= 2 * n - 1) return 0;
    return std::min({s + 1, n, 2 * n - 1 - s});
}

// triples i + j + k = s with 0 <= i, j, k < n, for s < n.
u64 small_triple_count(u64 s) { return (s + 1) * (s + 2) / 2; }

}  // namespace

TEST_CASE("schoolbook oracle and truncation") {
    const std::vector<u64> a{1, 2, 3};
    const std::vector<u64> b{4, 5};
    const std::vector<u128> full = convolve_exact(a, b, 4);
    REQUIRE(full.size() == 4);
    CHECK(static_cast<u64>(full[0]) == 4);
    CHECK(static_cast<u64>(full[1]) == 13);
    CHECK(static_cast<u64>(full[2]) == 22);
    CHECK(static_cast<u64>(full[3]) == 15);

    const std::vector<u128> cut = convolve_exact(a, b, 2);
    REQUIRE(cut.size() == 2);
    CHECK(static_cast<u64>(cut[0]) == 4);
    CHECK(static_cast<u64>(cut[1]) == 13);
}

TEST_CASE("transform path matches the all-ones closed form") {
    const std::size_t n = 20'000;  // past the schoolbook cutoff
    const std::vector<u64> ones(n, 1);
    const std::vector<u128> conv = convolve_exact(ones, ones, 2 * n - 1);
    for (std::size_t s = 0; s < conv.size(); ++s) REQUIRE(static_cast<u64>(conv[s]) == pair_count(s, n));
}

TEST_CASE("transform path matches schoolbook on random data") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<u64> dist(0, 1'000'000);
    const std::size_t n = 17'000;
    std::vector<u64> a(n), b(n);
    for (auto& x : a) x = dist(rng);
    for (auto& x : b) x = dist(rng);

    const std::vector<u128> fast = convolve_exact(a, b, 2 * n - 1);
    std::mt19937_64 pick(11);
    std::uniform_int_distribution<std::size_t> where(0, 2 * n - 2);
    for (int probe = 0; probe < 40; ++probe) {
        const std::size_t s = where(pick);
        u128 direct = 0;
        const std::size_t i_lo = s >= n - 1 ? s - (n - 1) : 0;
        const std::size_t i_hi = std::min(s, n - 1);
        for (std::size_t i = i_lo; i <= i_hi; ++i) direct += static_cast<u128>(a[i]) * b[s - i];
        REQUIRE(fast[s] == direct);
    }
}

TEST_CASE("chained folds keep exact triple counts") {
    const std::size_t n = 20'000;
    const std::vector<u64> ones(n, 1);
    const std::vector<u128> two = convolve_exact(ones, ones, n);
    const std::vector<u128> three = convolve_exact(two, ones, n);
    for (std::size_t s = 0; s < n; s += 397) REQUIRE(three[s] == small_triple_count(s));
    REQUIRE(three[n - 1] == small_triple_count(n - 1));
}

TEST_CASE("input entries past the kept range cannot contaminate the output") {
    std::vector<u64> a(std::size_t{1} << 23, 1);
    std::vector<u64> b(std::size_t{1} << 23, 1);
    a[0] = 3;
    b[0] = 5;
    const std::vector<u128> out = convolve_exact(a, b, 4);
    CHECK(static_cast<u64>(out[0]) == 15);
    CHECK(static_cast<u64>(out[1]) == 8);
    CHECK(static_cast<u64>(out[2]) == 9);
    CHECK(static_cast<u64>(out[3]) == 10);
}

TEST_CASE("real convolution tracks the exact one") {
    const std::size_t n = 40'000;
    const std::vector<double> ones(n, 1.0);
    const std::vector<double> conv = convolve_real(ones, ones, 2 * n - 1);
    for (std::size_t s = 0; s < conv.size(); s += 611) {
        const double expected = static_cast<double>(pair_count(s, n));
        REQUIRE(conv[s] == doctest::Approx(expected).epsilon(1e-9));
    }

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(0.0, 13.8);
    std::vector<double> a(1'000), b(20'000);
    for (auto& x : a) x = dist(rng);
    for (auto& x : b) x = dist(rng);
    const std::vector<double> fft = convolve_real(a, b, 5'000);
    for (std::size_t s = 0; s < 5'000; s += 101) {
        double direct = 0.0;
        for (std::size_t i = 0; i < a.size() && i <= s; ++i)
            if (s - i < b.size()) direct += a[i] * b[s - i];
        REQUIRE(fft[s] == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("exact convolution refuses overflowing inputs") {
    const u64 big = std::numeric_limits<u64>::max();
    const std::vector<u64> small_huge(100, big);
    CHECK_THROWS_AS(convolve_exact(small_huge, small_huge, 199), resource_limit_error);

    const std::vector<u64> long_huge(20'000, u64{1} << 40);
    CHECK_THROWS_AS(convolve_exact(long_huge, long_huge, 39'999), resource_limit_error);
}

TEST_CASE("empty and zero-length edges") {
    const std::vector<u64> empty;
    const std::vector<u64> a{1, 2};
    CHECK(convolve_exact(a, empty, 3) == std::vector<u128>(3, 0));
    CHECK(convolve_exact(a, a, 0).empty());
}
