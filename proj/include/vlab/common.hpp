#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vlab {

using u32 = std::uint32_t;
using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Exact counts can exceed 64 bits (e.g. denumerants at large N), so the
// public count type is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// Thrown when an operation would exceed a stated memory or precision budget.
// Callers must never receive silently wrong values instead.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

inline BigInt u128_to_bigint(u128 v) {
    BigInt hi = static_cast<u64>(v >> 64);
    return (hi << 64) | static_cast<u64>(v);
}

}  // namespace vlab
