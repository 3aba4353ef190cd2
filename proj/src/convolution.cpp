#include "vlab/convolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>
#include <stdexcept>

namespace vlab {
namespace {

constexpr std::size_t kSchoolbookCut = std::size_t{1} << 14;

// NTT-friendly primes with primitive root 3; transform length up to 2^23
// (bounded by 998244353 = 119 * 2^23 + 1).
constexpr u64 kNttPrimes[3] = {998244353, 167772161, 469762049};
constexpr std::size_t kMaxNttLen = std::size_t{1} << 23;

u64 mod_pow(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

void ntt(std::vector<u64>& a, u64 p, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        u64 w = mod_pow(3, (p - 1) / len, p);
        if (inverse) w = mod_pow(w, p - 2, p);
        for (std::size_t i = 0; i < n; i += len) {
            u64 wk = 1;
            for (std::size_t j = 0; j < len / 2; ++j) {
                u64 u = a[i + j];
                u64 v = a[i + j + len / 2] * wk % p;
                a[i + j] = u + v < p ? u + v : u + v - p;
                a[i + j + len / 2] = u >= v ? u - v : u + p - v;
                wk = wk * w % p;
            }
        }
    }
    if (inverse) {
        u64 inv_n = mod_pow(n % p, p - 2, p);
        for (auto& x : a) x = x * inv_n % p;
    }
}

// Garner reconstruction of x < p1*p2*p3 from residues mod the three primes.
u128 crt3(u64 r1, u64 r2, u64 r3) {
    constexpr u64 p1 = kNttPrimes[0], p2 = kNttPrimes[1], p3 = kNttPrimes[2];
    static const u64 inv_p1_mod_p2 = mod_pow(p1 % p2, p2 - 2, p2);
    static const u64 inv_p1p2_mod_p3 = mod_pow(p1 % p3 * (p2 % p3) % p3, p3 - 2, p3);
    u64 t1 = (r2 + p2 - r1 % p2) % p2 * inv_p1_mod_p2 % p2;
    u64 x12_mod_p3 = (r1 + p1 % p3 * t1) % p3;
    u64 t2 = (r3 + p3 - x12_mod_p3) % p3 * inv_p1p2_mod_p3 % p3;
    return static_cast<u128>(r1) + static_cast<u128>(p1) * t1 + static_cast<u128>(p1) * p2 * t2;
}

double max_entry(const std::vector<u64>& v) {
    u64 m = 0;
    for (u64 x : v) m = std::max(m, x);
    return static_cast<double>(m);
}

double max_entry(const std::vector<u128>& v) {
    u128 m = 0;
    for (u128 x : v) m = std::max(m, x);
    return static_cast<double>(m);
}

template <typename LeftInt>
std::vector<u128> convolve_exact_impl(const std::vector<LeftInt>& a, const std::vector<u64>& b,
                                      std::size_t out_len) {
    std::vector<u128> out(out_len, 0);
    if (a.empty() || b.empty() || out_len == 0) return out;

    // Input entries at index >= out_len never reach a kept output index.
    const std::size_t na = std::min(a.size(), out_len);
    const std::size_t nb = std::min(b.size(), out_len);
    const std::size_t full_len = std::min(out_len, na + nb - 1);

    // Every output entry is a sum of at most min(na, nb) products, so this
    // bounds all intermediates in both code paths below.
    const double overlap = static_cast<double>(std::min(na, nb));
    const double bound = max_entry(a) * max_entry(b) * overlap;

    if (std::max(na, nb) < kSchoolbookCut) {
        if (bound >= std::ldexp(1.0, 127))
            throw resource_limit_error("convolve_exact: entries exceed 128-bit capacity");
        for (std::size_t i = 0; i < na; ++i) {
            if (a[i] == 0) continue;
            const u128 ai = a[i];
            const std::size_t j_end = std::min(nb, full_len - i);
            for (std::size_t j = 0; j < j_end; ++j) out[i + j] += ai * b[j];
        }
        return out;
    }

    constexpr double kCrtCapacity = 998244353.0 * 167772161.0 * 469762049.0;
    if (bound >= 0.99 * kCrtCapacity)
        throw resource_limit_error("convolve_exact: entries exceed three-prime CRT capacity");

    std::size_t n = 1;
    while (n < na + nb - 1) n <<= 1;
    if (n > kMaxNttLen) throw resource_limit_error("convolve_exact: transform length exceeds 2^23");

    std::vector<u64> res[3];
    for (int t = 0; t < 3; ++t) {
        const u64 p = kNttPrimes[t];
        std::vector<u64> fa(n, 0), fb(n, 0);
        for (std::size_t i = 0; i < na; ++i) fa[i] = static_cast<u64>(a[i] % p);
        for (std::size_t j = 0; j < nb; ++j) fb[j] = b[j] % p;
        ntt(fa, p, false);
        ntt(fb, p, false);
        for (std::size_t i = 0; i < n; ++i) fa[i] = fa[i] * fb[i] % p;
        ntt(fa, p, true);
        res[t] = std::move(fa);
    }
    for (std::size_t i = 0; i < full_len; ++i) out[i] = crt3(res[0][i], res[1][i], res[2][i]);
    return out;
}

std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::vector<u128> convolve_exact(const std::vector<u64>& a, const std::vector<u64>& b, std::size_t out_len) {
    return convolve_exact_impl(a, b, out_len);
}

std::vector<u128> convolve_exact(const std::vector<u128>& a, const std::vector<u64>& b, std::size_t out_len) {
    return convolve_exact_impl(a, b, out_len);
}

std::vector<double> convolve_real(const std::vector<double>& a, const std::vector<double>& b,
                                  std::size_t out_len) {
    std::vector<double> out(out_len, 0.0);
    if (a.empty() || b.empty() || out_len == 0) return out;

    const std::size_t na = std::min(a.size(), out_len);
    const std::size_t nb = std::min(b.size(), out_len);
    const std::size_t full_len = std::min(out_len, na + nb - 1);
    if (std::max(na, nb) < kSchoolbookCut) {
        for (std::size_t i = 0; i < na; ++i) {
            if (a[i] == 0.0) continue;
            const double ai = a[i];
            const std::size_t j_end = std::min(nb, full_len - i);
            for (std::size_t j = 0; j < j_end; ++j) out[i + j] += ai * b[j];
        }
        return out;
    }

    std::size_t n = 1;
    while (n < na + nb - 1) n <<= 1;
    const std::size_t nc = n / 2 + 1;

    std::lock_guard<std::mutex> lock(fftw_mutex());
    double* buf = fftw_alloc_real(n);
    fftw_complex* fa = fftw_alloc_complex(nc);
    fftw_complex* fb = fftw_alloc_complex(nc);
    fftw_plan fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), buf, fa, FFTW_ESTIMATE);
    fftw_plan bwd = fftw_plan_dft_c2r_1d(static_cast<int>(n), fa, buf, FFTW_ESTIMATE);

    std::memset(buf, 0, n * sizeof(double));
    std::memcpy(buf, a.data(), na * sizeof(double));
    fftw_execute(fwd);
    std::memcpy(fb, fa, nc * sizeof(fftw_complex));

    std::memset(buf, 0, n * sizeof(double));
    std::memcpy(buf, b.data(), nb * sizeof(double));
    fftw_execute(fwd);

    for (std::size_t i = 0; i < nc; ++i) {
        const double re = fa[i][0] * fb[i][0] - fa[i][1] * fb[i][1];
        const double im = fa[i][0] * fb[i][1] + fa[i][1] * fb[i][0];
        fa[i][0] = re;
        fa[i][1] = im;
    }
    fftw_execute(bwd);

    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < full_len; ++i) out[i] = buf[i] * scale;

    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buf);
    fftw_free(fa);
    fftw_free(fb);
    return out;
}

}  // namespace vlab
