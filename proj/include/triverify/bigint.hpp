#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "triverify/errors.hpp"

namespace triverify {

// Group orders and Euler characteristics are exact unbounded integers;
// nothing in the pipeline approximates them with floating point.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigint_pow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline std::optional<std::uint64_t> to_u64(const BigInt& x) {
    if (x < 0 || x > BigInt(UINT64_MAX)) return std::nullopt;
    return static_cast<std::uint64_t>(x);
}

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw Error("empty integer string");
    return BigInt(s);
}

}  // namespace triverify
