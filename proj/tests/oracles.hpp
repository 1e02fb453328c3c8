// Independent brute-force oracles. Deliberately naive: no modular inverses, no streaming,
// no union-find. Shared by the unit tests and the acceptance binary.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

struct Dioph {
    int64_t e0;
    std::vector<int64_t> pp;
};

// exhaustive search over 0 < p_i' < p_i; only for small products
inline std::optional<Dioph> brute_diophantine(const std::vector<int64_t>& p) {
    int64_t P = 1;
    for (int64_t x : p) P *= x;
    std::vector<int64_t> pp(p.size(), 1);
    for (;;) {
        // e₀P = −1 − Σ p_i′P/p_i
        int64_t s = -1;
        for (size_t i = 0; i < p.size(); ++i) s -= pp[i] * (P / p[i]);
        if (s % P == 0) return Dioph{s / P, pp};
        size_t i = 0;
        while (i < p.size() && ++pp[i] == p[i]) pp[i++] = 1;
        if (i == p.size()) return std::nullopt;
    }
}

// ⌈a/b⌉ by stepping, a >= 0, b > 0
inline int64_t ceil_by_count(int64_t a, int64_t b) {
    int64_t m = a / b;
    while (m * b < a) ++m;
    while (m > 0 && (m - 1) * b >= a) --m;
    return m;
}

inline int64_t delta(const std::vector<int64_t>& p, const Dioph& d, int64_t n) {
    int64_t v = 1 - d.e0 * n;
    for (size_t i = 0; i < p.size(); ++i) v -= ceil_by_count(n * d.pp[i], p[i]);
    return v;
}

inline int64_t n0(const std::vector<int64_t>& p) {
    int64_t P = 1;
    for (int64_t x : p) P *= x;
    int64_t r = P * (static_cast<int64_t>(p.size()) - 2);
    for (int64_t x : p) r -= P / x;
    return r;
}

// Graded root by explicit ray merging: the vertices at grading g are the maximal runs of
// indices with τ <= g. Returns per-grading vertex counts, ℍ_red rank and U-order.
struct Root {
    std::map<int64_t, int64_t> fiber;       // grading -> vertex count
    std::map<int64_t, int64_t> red_by_grading;
    int64_t rank = 0;
    int64_t u_order = 0;
};

inline Root ray_merge(const std::vector<int64_t>& tau) {
    Root r;
    const int64_t lo = *std::min_element(tau.begin(), tau.end());
    const int64_t hi = *std::max_element(tau.begin(), tau.end());
    // trunk: runs containing the first global minimum
    const size_t tmin = static_cast<size_t>(std::min_element(tau.begin(), tau.end()) - tau.begin());
    struct Run {
        size_t a, b;
    };
    std::map<int64_t, std::vector<Run>> runs;
    for (int64_t g = lo; g <= hi + 1; ++g) {
        std::vector<Run> rs;
        for (size_t i = 0; i < tau.size();) {
            if (tau[i] > g) {
                ++i;
                continue;
            }
            size_t j = i;
            while (j + 1 < tau.size() && tau[j + 1] <= g) ++j;
            rs.push_back({i, j});
            i = j + 1;
        }
        runs[g] = rs;
        r.fiber[g] = static_cast<int64_t>(rs.size());
        if (rs.size() > 1) r.red_by_grading[g] = static_cast<int64_t>(rs.size()) - 1;
        r.rank += static_cast<int64_t>(rs.size()) - 1;
    }
    // steps from a vertex up to the trunk
    for (int64_t g = lo; g <= hi; ++g)
        for (const Run& v : runs[g]) {
            if (v.a <= tmin && tmin <= v.b) continue;
            int64_t steps = 0;
            size_t probe = v.a;
            for (int64_t h = g; h <= hi + 1; ++h, ++steps) {
                bool on_trunk = false;
                for (const Run& w : runs[h])
                    if (w.a <= probe && probe <= w.b) on_trunk = w.a <= tmin && tmin <= w.b;
                if (on_trunk) break;
            }
            r.u_order = std::max(r.u_order, steps);
        }
    return r;
}

// Dense τ over 0..N₀ (τ(n+1) = τ(n) + Δ(n)) straight from the definition.
inline std::vector<int64_t> dense_tau(const std::vector<int64_t>& p) {
    auto d = *brute_diophantine(p);
    int64_t N = n0(p);
    std::vector<int64_t> tau{0};
    if (N <= 0) {
        tau.push_back(1);
        return tau;
    }
    for (int64_t n = 0; n <= N; ++n) tau.push_back(tau.back() + delta(p, d, n));
    return tau;
}

}  // namespace oracle
