// Exact 128-bit integer helpers. Every operation that could wrap throws instead.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sfhs {

using i128 = __int128;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// enumeration / work-budget exceeded
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline i128 add_ck(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in addition");
    return r;
}

inline i128 sub_ck(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit overflow in subtraction");
    return r;
}

inline i128 mul_ck(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in multiplication");
    return r;
}

inline i128 abs128(i128 a) {
    if (a < 0) return sub_ck(0, a);
    return a;
}

// floor / ceiling division for b > 0
inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

inline i128 ceil_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && (a > 0)) ++q;
    return q;
}

inline i128 mod_pos(i128 a, i128 m) {
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

i128 gcd128(i128 a, i128 b);

// inverse of a modulo m (m >= 1, gcd(a,m) = 1); result in [0, m)
i128 mod_inverse(i128 a, i128 m);

std::string to_string(i128 v);

// parses an optionally signed decimal integer; throws InvalidInput
i128 parse_i128(std::string_view s);

inline bool fits_i64(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

inline int64_t to_i64(i128 v) {
    if (!fits_i64(v)) throw OverflowError("value does not fit in 64 bits");
    return static_cast<int64_t>(v);
}

}  // namespace sfhs
