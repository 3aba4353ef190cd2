#pragma once

#include <vector>

#include "vlab/common.hpp"

namespace vlab {

// Exact additive convolution (a * b)[s] = sum_{i+j=s} a[i] b[j], truncated to
// indices < out_len.  Entries are nonnegative; every intermediate value is
// computed exactly or a resource_limit_error is thrown.  Small products use
// the schoolbook rule; larger ones a three-prime NTT with CRT reconstruction,
// which is exact while max(a)*max(b)*min(len) stays below ~7.9e25.
std::vector<u128> convolve_exact(const std::vector<u64>& a, const std::vector<u64>& b, std::size_t out_len);

// Same, with u128 left inputs so folds can be chained: c = ((a1*a2)*a3)...
std::vector<u128> convolve_exact(const std::vector<u128>& a, const std::vector<u64>& b, std::size_t out_len);

// Floating additive convolution via FFT (double precision, deterministic
// plans).  Used for Lambda/theta weights where entries are reals.
std::vector<double> convolve_real(const std::vector<double>& a, const std::vector<double>& b, std::size_t out_len);

}  // namespace vlab
