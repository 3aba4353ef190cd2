#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "vlab/arith.hpp"

namespace vlab {

// Weight attached to each solution variable in counting and exponential sums.
//   omega_indicator : 1 if Omega(n) equals the slot's target, else 0
//   prime_indicator : 1 if n is prime, else 0
//   von_mangoldt    : Lambda(n)
//   theta           : log n if n is prime, else 0
enum class WeightKind { omega_indicator, prime_indicator, von_mangoldt, theta };

inline const char* weight_name(WeightKind w) {
    switch (w) {
        case WeightKind::omega_indicator: return "omega";
        case WeightKind::prime_indicator: return "prime";
        case WeightKind::von_mangoldt: return "lambda";
        case WeightKind::theta: return "theta";
    }
    return "?";
}

inline WeightKind weight_from_name(const std::string& name) {
    if (name == "omega") return WeightKind::omega_indicator;
    if (name == "prime") return WeightKind::prime_indicator;
    if (name == "lambda") return WeightKind::von_mangoldt;
    if (name == "theta") return WeightKind::theta;
    throw std::invalid_argument("unknown weight '" + name + "' (expected omega|prime|lambda|theta)");
}

// w(n) for the dense kinds; omega_indicator needs the slot target r.
inline double weight_value(const FactorSieve& sieve, u64 n, WeightKind w, int r = 1) {
    switch (w) {
        case WeightKind::omega_indicator: return sieve.big_omega(n) == r ? 1.0 : 0.0;
        case WeightKind::prime_indicator: return sieve.is_prime(n) ? 1.0 : 0.0;
        case WeightKind::von_mangoldt: return sieve.von_mangoldt(n);
        case WeightKind::theta: return sieve.is_prime(n) ? std::log(static_cast<double>(n)) : 0.0;
    }
    return 0.0;
}

}  // namespace vlab
