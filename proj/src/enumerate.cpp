#include "sfhs/enumerate.hpp"

#include <numeric>

#include "sfhs/arith.hpp"

namespace sfhs {

namespace {

bool coprime_to_all(int64_t x, const std::vector<int64_t>& pre) {
    for (int64_t y : pre)
        if (std::gcd(x, y) != 1) return false;
    return true;
}

void rec_product(int l, int64_t cap, std::vector<int64_t>& cur, __int128 prod, const TupleFn& fn) {
    int m = static_cast<int>(cur.size());
    if (m == l) {
        fn(cur);
        return;
    }
    int64_t start = m == 0 ? 2 : cur.back() + 1;
    for (int64_t x = start;; ++x) {
        // smallest completion: x, x+1, …
        __int128 lb = prod;
        for (int k = 0; k < l - m && lb <= cap; ++k) lb *= (x + k);
        if (lb > cap) break;
        if (!coprime_to_all(x, cur)) continue;
        cur.push_back(x);
        rec_product(l, cap, cur, prod * x, fn);
        cur.pop_back();
    }
}

void rec_n0(int l, int64_t cap, std::vector<int64_t>& cur, const TupleFn& fn, bool positive_only) {
    int m = static_cast<int>(cur.size());
    if (m == l) {
        __int128 v = n0_of(cur);
        if (v <= cap && (!positive_only || v > 0)) fn(cur);
        return;
    }
    int64_t start = m == 0 ? 2 : cur.back() + 1;
    std::vector<int64_t> probe;
    for (int64_t x = start;; ++x) {
        probe = cur;
        for (int k = 0; k < l - m; ++k) probe.push_back(x + k);
        if (n0_of(probe) > cap) break;
        if (!coprime_to_all(x, cur)) continue;
        cur.push_back(x);
        rec_n0(l, cap, cur, fn, positive_only);
        cur.pop_back();
    }
}

}  // namespace

__int128 n0_of(const std::vector<int64_t>& p) {
    __int128 P = 1;
    for (int64_t x : p) P = mul_ck(P, x);
    __int128 r = mul_ck(P, static_cast<__int128>(p.size()) - 2);
    for (int64_t x : p) r -= P / x;
    return r;
}

void for_each_tuple_by_product(int l, int64_t max_product, const TupleFn& fn) {
    std::vector<int64_t> cur;
    rec_product(l, max_product, cur, 1, fn);
}

void for_each_tuple_by_n0(int64_t max_n0, const TupleFn& fn, bool positive_only) {
    for (int l = 3;; ++l) {
        std::vector<int64_t> smallest;
        for (int k = 0; k < l; ++k) smallest.push_back(2 + k);
        if (n0_of(smallest) > max_n0) break;
        std::vector<int64_t> cur;
        rec_n0(l, max_n0, cur, fn, positive_only);
    }
}

std::vector<std::vector<int64_t>> tuples_by_product(int l, int64_t max_product) {
    std::vector<std::vector<int64_t>> out;
    for_each_tuple_by_product(l, max_product, [&](const std::vector<int64_t>& t) { out.push_back(t); });
    return out;
}

}  // namespace sfhs
