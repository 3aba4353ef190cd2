#include "vlab/singular_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "factor_util.hpp"

namespace vlab {
namespace {

using detail::divisor_count;
using detail::factorize;
using detail::is_prime_u64;
using detail::mu_phi;

std::shared_ptr<const std::vector<u64>> prime_list(u64 limit) {
    static std::mutex mu;
    static std::map<u64, std::shared_ptr<const std::vector<u64>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(limit);
    if (it != cache.end()) return it->second;

    std::vector<bool> composite(limit + 1, false);
    auto primes = std::make_shared<std::vector<u64>>();
    for (u64 p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes->push_back(p);
        for (u64 j = p * p; j <= limit; j += p) composite[j] = true;
    }
    if (cache.size() > 32) cache.clear();
    cache[limit] = primes;
    return cache[limit];
}

void check_instance(u64 n, const std::vector<u64>& c) {
    if (n < 1) throw std::invalid_argument("singular series: N must be >= 1");
    if (c.size() < 3) throw std::invalid_argument("singular series: need at least 3 slots");
    u64 g = 0;
    for (u64 ci : c) {
        if (ci < 1) throw std::invalid_argument("singular series: coefficients must be positive");
        g = std::gcd(g, ci);
    }
    if (g != 1) throw std::invalid_argument("singular series: gcd(c) must be 1");
}

}  // namespace

std::string VanishingReport::reason() const {
    if (!vanishes) return "";
    if (!parity_ok) return "parity";
    return "gcd at position " + std::to_string(failing_gcd_index);
}

i64 ramanujan_sum(u64 q, i64 n) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
    const u64 residue = static_cast<u64>(((n % static_cast<i64>(q)) + static_cast<i64>(q)) % static_cast<i64>(q));
    const u64 g = (residue == 0) ? q : std::gcd(q, residue);

    // Enumerate divisors d of g; each term is d * mu(q/d).
    const auto gf = factorize(g);
    i64 sum = 0;
    std::vector<int> exps(gf.size(), 0);
    while (true) {
        u64 d = 1;
        for (std::size_t i = 0; i < gf.size(); ++i)
            for (int e = 0; e < exps[i]; ++e) d *= gf[i].first;
        sum += static_cast<i64>(d) * mu_phi(q / d).first;
        std::size_t i = 0;
        for (; i < gf.size(); ++i) {
            if (exps[i] < gf[i].second) {
                ++exps[i];
                break;
            }
            exps[i] = 0;
        }
        if (i == gf.size()) break;
    }
    return sum;
}

double local_factor(u64 p, u64 n, const std::vector<u64>& c) {
    if (!is_prime_u64(p)) throw std::invalid_argument("local_factor: p = " + std::to_string(p) + " is not prime");
    if (n < 1 || c.empty()) throw std::invalid_argument("local_factor: need N >= 1 and nonempty c");
    int k = 0;
    for (u64 ci : c)
        if (ci % p != 0) ++k;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    long double pw = 1.0L;  // (p-1)^k
    for (int i = 0; i < k; ++i) pw *= static_cast<long double>(p - 1);
    if (n % p == 0) return static_cast<double>(1.0L + sign * (p - 1) / pw);
    return static_cast<double>(1.0L - sign / pw);
}

SingularSeriesValue singular_series_product(u64 n, const std::vector<u64>& c, u64 p_cutoff) {
    check_instance(n, c);
    const u64 c_max = *std::max_element(c.begin(), c.end());
    if (p_cutoff < 2 || p_cutoff < c_max)
        throw std::invalid_argument("singular_series_product: cutoff must be >= max(2, max(c)) for a valid tail bound");

    SingularSeriesValue out;
    out.form = SeriesForm::euler_product;
    out.cutoff = p_cutoff;

    long double prod = 1.0L;
    const auto primes = prime_list(p_cutoff);
    for (u64 p : *primes) {
        const double f = local_factor(p, n, c);
        if (f == 0.0) {
            out.value = 0.0;
            out.tail_bound = 0.0;
            out.vanishes = true;
            return out;
        }
        prod *= f;
    }
    out.value = static_cast<double>(prod);

    // Every skipped prime p > P satisfies p ∤ c_i for all i, so its factor f_p
    // obeys |f_p - 1| <= (p-1)^-(m-1) <= 1/4, hence |log f_p| <= 2 (p-1)^-(m-1)
    // and sum_{p > P} (p-1)^-(m-1) <= (P-1)^-(m-2) / (m-2) by comparison with
    // the integral.
    const int m = static_cast<int>(c.size());
    const double s = std::pow(static_cast<double>(p_cutoff - 1), -(m - 2)) / (m - 2);
    out.tail_bound = std::abs(out.value) * std::expm1(2.0 * s);
    return out;
}

SingularSeriesValue singular_series_partial(u64 n, const std::vector<u64>& c, u64 q_cutoff) {
    check_instance(n, c);
    if (q_cutoff < 1) throw std::invalid_argument("singular_series_partial: cutoff must be >= 1");

    SingularSeriesValue out;
    out.form = SeriesForm::q_partial_sum;
    out.cutoff = q_cutoff;

    out.vanishes = vanishing_criterion(n, c).vanishes;
    if (out.vanishes) return out;

    long double sum = 0.0L;
    for (u64 q = 1; q <= q_cutoff; ++q) {
        long double term = static_cast<long double>(ramanujan_sum(q, static_cast<i64>(n)));
        for (u64 ci : c) {
            if (term == 0.0L) break;
            const auto [mu, phi] = mu_phi(q / std::gcd(ci, q));
            term *= static_cast<long double>(mu) / static_cast<long double>(phi);
        }
        sum += term;
    }
    out.value = static_cast<double>(sum);

    // |term_q| <= prod(c) * gcd(q, N) / phi(q)^m and phi(q) >= sqrt(q/2);
    // summing over q > Q after splitting by d = gcd(q, N) gives
    //   tail <= prod(c) * 2^(m/2) * d(N) * (m / (m-2)) * Q^-((m-2)/2).
    const int m = static_cast<int>(c.size());
    double c_prod = 1.0;
    for (u64 ci : c) c_prod *= static_cast<double>(ci);
    out.tail_bound = c_prod * std::pow(2.0, 0.5 * m) * divisor_count(n) *
                     (static_cast<double>(m) / (m - 2)) *
                     std::pow(static_cast<double>(q_cutoff), -0.5 * (m - 2));
    return out;
}

VanishingReport vanishing_criterion(u64 n, const std::vector<u64>& c) {
    check_instance(n, c);
    VanishingReport rep;
    u64 c_sum = 0;
    for (u64 ci : c) c_sum += ci;
    rep.parity_ok = ((c_sum + n) % 2 == 0);
    rep.replaced_gcds.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        u64 g = n;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j != i) g = std::gcd(g, c[j]);
        rep.replaced_gcds[i] = g;
        if (g != 1 && rep.failing_gcd_index == 0) rep.failing_gcd_index = i + 1;
    }
    rep.vanishes = !rep.parity_ok || rep.failing_gcd_index != 0;
    return rep;
}

}  // namespace vlab
