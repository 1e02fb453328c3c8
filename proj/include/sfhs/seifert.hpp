// Seifert invariants of Brieskorn-type homology spheres Σ(p₁,…,p_l):
// the Diophantine data (e₀, p_i′), the counting function Δ, N₀ and the Δ/τ sequences.
#pragma once

#include <cstdint>
#include <vector>

#include "sfhs/arith.hpp"

namespace sfhs {

struct SeifertParams {
    std::vector<i128> p;  // strictly increasing, pairwise coprime, each >= 2
    i128 P = 0;           // product of the p_i

    // Validates and builds; throws InvalidInput / OverflowError.
    static SeifertParams make(std::vector<i128> fibers);
    static SeifertParams make(const std::vector<int64_t>& fibers);

    size_t l() const { return p.size(); }
};

struct DiophantineSolution {
    i128 e0 = 0;                // negative
    std::vector<i128> pprime;   // 0 < p_i' < p_i
};

DiophantineSolution solve_diophantine(const SeifertParams& sp);

// e₀P + Σ p_i′·P/p_i + 1; zero for a genuine solution
i128 diophantine_residual(const SeifertParams& sp, const DiophantineSolution& sol);

// N₀ = P(l−2) − Σ P/p_i
i128 n0(const SeifertParams& sp);

// Δ(n) = 1 + |e₀|n − Σ ⌈n p_i′/p_i⌉ for n >= 0
i128 delta_at(const SeifertParams& sp, const DiophantineSolution& sol, i128 n);

// O(l) proof that Δ(n) = −Δ(N₀−n) for every integer n: per fiber N₀p_i′ ≡ 1 (mod p_i),
// which makes ⌈n p_i′/p_i⌉ + ⌈(N₀−n)p_i′/p_i⌉ independent of n, and the resulting
// constant Δ(n) + Δ(N₀−n) vanishes.
bool antisymmetry_certificate(const SeifertParams& sp, const DiophantineSolution& sol);

// An entry of a Δ-sequence. `sub` orders pieces produced by refinement at one position.
struct DeltaEntry {
    int64_t pos = 0;
    int32_t sub = 0;
    int32_t value = 0;
    bool operator==(const DeltaEntry&) const = default;
};

struct DeltaSequence {
    std::vector<DeltaEntry> entries;
    i128 n0 = 0;
};

// Throws InvalidInput if the sequence breaks its invariants.
void validate(const DeltaSequence& ds);

struct TauSequence {
    std::vector<int64_t> values;  // τ(0) = 0, τ(i+1) − τ(i) = i-th Δ value
};

inline constexpr int64_t kDefaultEnumerationCap = 100'000'000;

// All n <= N₀ with Δ(n) != 0, up to and including the last negative value.
// For N₀ <= 0 the sequence is the single entry (0, 1). Throws CapExceeded when
// N₀ + 1 exceeds `cap`.
DeltaSequence delta_sequence(const SeifertParams& sp, int64_t cap = kDefaultEnumerationCap);

TauSequence tau_from_delta(const DeltaSequence& ds);

// Incremental Δ(n), Δ(n+1), … in 64-bit arithmetic without divisions.
class DeltaStepper {
public:
    DeltaStepper(const SeifertParams& sp, const DiophantineSolution& sol);

    int64_t n() const { return n_; }
    int64_t value() const { return value_; }  // Δ(n)
    void advance();

private:
    struct Fiber {
        int64_t p, a, r;  // r = n·a mod p
    };
    std::vector<Fiber> fibers_;
    int64_t abs_e0_;
    int64_t n_ = 0;
    int64_t value_ = 1;
};

}  // namespace sfhs
