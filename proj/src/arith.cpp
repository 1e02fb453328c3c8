#include "sfhs/arith.hpp"

#include <algorithm>

namespace sfhs {

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 mod_inverse(i128 a, i128 m) {
    if (m <= 0) throw InvalidInput("modulus must be positive");
    if (m == 1) return 0;
    i128 r0 = mod_pos(a, m), r1 = m;
    i128 s0 = 1, s1 = 0;
    while (r1 != 0) {
        i128 q = r0 / r1;
        i128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;  // |s| stays below m, no overflow
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw InvalidInput("value is not invertible modulo " + to_string(m));
    return mod_pos(s0, m);
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // work on the negative side so that INT128_MIN is representable
    std::string out;
    i128 x = neg ? v : -v;
    while (x != 0) {
        int d = static_cast<int>(-(x % 10));
        out.push_back(static_cast<char>('0' + d));
        x /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

i128 parse_i128(std::string_view s) {
    if (s.empty()) throw InvalidInput("empty integer");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw InvalidInput("malformed integer '" + std::string(s) + "'");
    i128 v = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw InvalidInput("malformed integer '" + std::string(s) + "'");
        try {
            v = sub_ck(mul_ck(v, 10), c - '0');
        } catch (const OverflowError&) {
            throw InvalidInput("integer out of 128-bit range: '" + std::string(s) + "'");
        }
    }
    if (!neg) {
        try {
            v = sub_ck(0, v);
        } catch (const OverflowError&) {
            throw InvalidInput("integer out of 128-bit range: '" + std::string(s) + "'");
        }
    }
    return v;
}

}  // namespace sfhs
