#pragma once

#include "error.hpp"
#include "polynomial.hpp"

namespace chainseidel {

/// floor(sqrt(x)) by integer Newton iteration.
inline BigInt integer_sqrt(const BigInt& x) {
    require(x >= 0, ErrorCode::invalid_argument, "integer_sqrt of a negative number");
    if (x < 2) return x;
    // Start above the root: 2^ceil(bits/2) > sqrt(x).
    const auto bits = boost::multiprecision::msb(x) + 1;
    BigInt r = BigInt(1) << ((bits + 1) / 2);
    while (true) {
        BigInt next = (r + x / r) >> 1;
        if (next >= r) return r;
        r = std::move(next);
    }
}

inline bool is_perfect_square(const BigInt& x) {
    if (x < 0) return false;
    const BigInt r = integer_sqrt(x);
    return r * r == x;
}

} // namespace chainseidel
