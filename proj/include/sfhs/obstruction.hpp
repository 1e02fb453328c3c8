// Surgery obstructions for Seifert fibered homology spheres: the fiber-count lower bound
// on U-orders, genus bounds, the five-fiber case split, verdicts and family scans.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfhs/seifert.hpp"

namespace sfhs {

// Largest k >= −1 with k < ½(l − 2 − Σ 1/p_i), i.e. 2kP < N₀. −1 when no k >= 0 qualifies.
int64_t kcond_max_k(const SeifertParams& sp);

// Smallest l with g <= (24l − 103)/90. With genus_one_refinement, g = 1 gives 5.
int64_t genus_bound_min_fibers(int64_t g, bool genus_one_refinement = false);

// For l = 5: 1..6 for the first listed condition that holds, 0 otherwise. Each forces
// 2P <= N₀ except (2,3,7,83,85), where N₀ = 2P − 1 (its U-order is 21 regardless).
//   1: p₁ >= 4                      2: p₁ = 3, p₅ >= 17
//   3: 2, 3, p₃ >= 17               4: 2, 3, 7, p₄ >= 83
//   5: 2, 3, 7, 43, p₅ >= 1811      6: 2, 3, 11, p₄ >= 15, p₅ >= 101
int five_fiber_case(const SeifertParams& sp);

// Which residual family a five-fiber tuple outside the six cases belongs to:
// "2,3,5,p,q", "2,3,7,p,q", "2,3,11,13,p" or "other".
std::string residual_family(const SeifertParams& sp);

// Takes the largest k with 2kP < N₀, Δ(kP) = k+1 and Δ(N₀−kP) = −(k+1), evaluated
// pointwise; then U^k·HF_red != 0. Returns the implied lower bound k+1 on the U-order,
// or 0 if no k qualifies.
int64_t probe_lower_bound(const SeifertParams& sp);

struct ObstructionQuery {
    int64_t genus = 0;
    std::optional<int64_t> g4;  // defaults to genus
    SeifertParams target;
};

enum class Verdict { Obstructed, Inconclusive };

struct ObstructionResult {
    Verdict verdict = Verdict::Inconclusive;
    int64_t bound = 0;          // U-order a 1/n surgery on such a knot can have at most
    int64_t u_order = 0;        // exact value, or a lower bound when !u_order_exact
    bool u_order_exact = false;
    std::string method;         // how u_order was obtained
    std::string witness;        // the vanishing result that is violated
    std::vector<std::string> assumptions;
};

struct ObstructOptions {
    int64_t exact_step_cap = 50'000'000;    // full streaming evaluation up to this many steps
    int64_t search_step_cap = 2'000'000'000; // early-exit search budget
    bool prefer_exact = true;  // false: try the cheap probes before a full evaluation
};

// Throws InvalidInput for g4 outside [0, g], CapExceeded when no method decides the query.
ObstructionResult obstruct(const ObstructionQuery& q, const ObstructOptions& opt = {});

struct ScanRecord {
    std::vector<int64_t> p;
    i128 e0 = 0;
    std::vector<i128> pprime;
    i128 n0 = 0;
    int64_t u_order = 0;
    int64_t hf_red_rank = 0;
    int64_t kcond_max_k = -1;
    int64_t probe_lower_bound = 0;
    bool lemma_ok = true;  // u_order > kcond_max_k
    bool probe_ok = true;  // probe_lower_bound <= u_order
};

struct ScanOptions {
    int fibers = 5;
    int64_t max_product = 0;
    int threads = 1;
    int64_t max_tuples = 50'000'000;
    int64_t step_cap = 100'000'000;  // per tuple
};

// Every tuple with the given fiber count and product <= max_product, in lexicographic
// order regardless of the thread count.
std::vector<ScanRecord> scan_families(const ScanOptions& opt);

// One line of the scan dataset, fields in a fixed order.
std::string to_json_line(const ScanRecord& r);

}  // namespace sfhs
