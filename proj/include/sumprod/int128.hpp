#pragma once

#include <cstdint>
#include <string>

namespace sumprod {

using u128 = unsigned __int128;
using i128 = __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int i = 40;
    while (v > 0) {
        buf[--i] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 40);
}

inline std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(static_cast<u128>(-(v + 1)) + 1);
    return to_string(static_cast<u128>(v));
}

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// 256-bit product, for overflow-free comparisons of 128-bit products.
struct U256 {
    u128 hi, lo;
};

inline U256 mul_u256(u128 a, u128 b) {
    const u128 mask = (u128(1) << 64) - 1;
    u128 a0 = a & mask, a1 = a >> 64;
    u128 b0 = b & mask, b1 = b >> 64;
    u128 ll = a0 * b0;
    u128 lh = a0 * b1;
    u128 hl = a1 * b0;
    u128 hh = a1 * b1;
    u128 mid = (ll >> 64) + (lh & mask) + (hl & mask);
    U256 r;
    r.lo = (mid << 64) | (ll & mask);
    r.hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    return r;
}

inline int cmp_u256(U256 a, U256 b) {
    if (a.hi != b.hi) return a.hi < b.hi ? -1 : 1;
    if (a.lo != b.lo) return a.lo < b.lo ? -1 : 1;
    return 0;
}

// sign of a*b - c*d without overflow
inline int cmp_products(u128 a, u128 b, u128 c, u128 d) {
    return cmp_u256(mul_u256(a, b), mul_u256(c, d));
}

}  // namespace sumprod
