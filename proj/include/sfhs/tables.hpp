// Declarative catalogue of the Δ-probe tables for the families Σ(2,3,5,p,q),
// Σ(2,3,7,p,q) and Σ(2,3,11,13,p), and the generic engine that checks them on samples.
//
// Tables are numbered 1..12 in the order they are printed:
//   1 key values Δ(xpq), Δ(xpq±1) for 2,3,5,p,q     7  pq ≡ 13 mod 30, p = 7, e₀ = −3
//   2 general cases, 2,3,5,p,q                      8  pq ≡ 17 mod 30, p = 7, e₀ = −2
//   3 pq ≡ 1 mod 30, e₀ = −3                        9  key values for 2,3,7,p,q
//   4 pq ≡ 13 mod 30, e₀ = −3                       10 general cases, 2,3,7,p,q
//   5 pq ≡ 17 mod 30, e₀ = −2                       11 pq ≡ 1 mod 42, e₀ = −2
//   6 pq ≡ 29 mod 30, e₀ = −2                       12 general cases, 2,3,11,13,p
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfhs/seifert.hpp"

namespace sfhs {

enum class Family { S235, S237, S2_3_11_13 };

// exact rational, denominator > 0
struct Rat {
    i128 num = 0, den = 1;
    Rat() = default;
    Rat(i128 n, i128 d = 1);
};
bool operator<(const Rat& a, const Rat& b);
bool operator<=(const Rat& a, const Rat& b);
bool operator==(const Rat& a, const Rat& b);
Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);

// lo < x <= hi. Ratios p′/p never sit on a boundary for the admissible p, so the
// open/closed distinction in the printed headers is immaterial.
struct Bin {
    Rat lo, hi;
    bool contains(const Rat& x) const { return lo < x && x <= hi; }
};

// Linear form in pq, p·q′, p′·q, q, q′, p, p′ and 1. For Σ(2,3,11,13,p) only p, p′, 1 are used.
struct Lin {
    i128 pq = 0, pqp = 0, ppq = 0, q = 0, qp = 0, p = 0, pp = 0, c = 0;
    i128 eval(i128 P, i128 Q, i128 Pp, i128 Qp) const;
    std::string str() const;
};

// The row's "< N₀/2" claim holds when p > p_above and q > q_above, or (p, q) matches an
// exception (p = e.first, q > e.second).
struct Threshold {
    bool claimed = false;
    int64_t p_above = 0;
    int64_t q_above = 0;
    std::vector<std::pair<int64_t, int64_t>> exceptions;
    bool holds(int64_t p, int64_t q) const;
};

struct KeyProbe {
    Lin at;
    int64_t c0 = 0;
    int sign = 0;  // expected Δ = c0 + sign·|e₀|
};

enum class CellKind {
    Window,         // start..end contains two positive entries with no negative between
    KeyValues,      // every probe takes its formula value
    Unsatisfiable,  // hypotheses cannot hold together
    Delegated       // covered by another table
};

struct TableCell {
    std::string id;
    // side conditions
    std::vector<int> residues;  // pq mod 30 / 42; empty = any
    int e0 = 0;                 // 0 = any
    int a = 0;                  // 0 = any
    std::vector<int> bs;        // allowed b; empty = any
    int cclass = 0;             // 2,3,11,13,p: 1, 12, −1 (other), 0 any
    std::optional<Bin> pbin, qbin;
    CellKind kind = CellKind::Window;
    Lin start, end;
    bool half_on_start = false;  // the "< N₀/2" claim is about start instead of end
    std::vector<KeyProbe> keys;
    Threshold threshold;
    int delegate = 0;
    std::string note;  // deviations from the printed entry
};

struct ProbeTable {
    int number = 0;
    std::string name;
    std::string caption;
    Family family = Family::S235;
    int64_t p_fixed = 0;
    int64_t p_min = 0, p_max = 0, q_max = 0;  // sampling box (q_max unused for 2,3,11,13,p)
    std::vector<TableCell> cells;
};

const std::vector<ProbeTable>& catalogue();

// by number ("4") or name ("235-13mod30"); throws InvalidInput
const ProbeTable& find_table(const std::string& key);

// Family data for one (p, q), q = 0 for Σ(2,3,11,13,p).
struct FamilySample {
    Family family;
    int64_t p = 0, q = 0;
    SeifertParams sp;
    DiophantineSolution sol;
    i128 n0 = 0;
    int residue = 0;  // pq mod 30 or 42; 0 for 2,3,11,13,p
    int a = 0, b = 0, c = 0;
    i128 pp = 0, qp = 0;
};

// nullopt when (p, q) is not an admissible member of the family
std::optional<FamilySample> family_sample(Family f, int64_t p, int64_t q);

bool cell_applies(const TableCell& cell, const FamilySample& s);

struct SampleCheck {
    bool applicable = false;
    bool ok = true;
    bool half_checked = false;
    std::vector<std::string> mismatches;
};

SampleCheck verify_sample(const TableCell& cell, const FamilySample& s);

// Interval argument on |e₀| = K + p′/p + q′/q + 1/(M·pq) over the cell's bins
// (and, for p = 7, over every admissible p′). Returns the reason when the hypotheses
// can never hold together.
std::optional<std::string> certify_unsatisfiable(const ProbeTable& t, const TableCell& cell);

struct CellReport {
    std::string id;
    std::string status;  // PASS, FAIL, UNSATISFIABLE, INSUFFICIENT, DELEGATED
    int64_t candidates = 0;
    std::vector<std::pair<int64_t, int64_t>> samples;
    int64_t mismatches = 0;
    int64_t half_checked = 0;
    std::string detail;
};

struct TableReport {
    int number = 0;
    std::string name;
    uint64_t seed = 0;
    int samples_requested = 0;
    std::vector<CellReport> cells;
    bool pass = false;
};

// Samples per cell: the smallest admissible (p, q) (up to 5) plus seeded random picks
// from the rest of the box, all satisfying the cell's side conditions and threshold.
TableReport verify_table(const ProbeTable& t, int samples, uint64_t seed);

// Searches the tables of the target's family for a cell whose hypotheses hold and whose
// window certifies U·HF_red != 0 before N₀/2. Returns a description of the witness.
std::optional<std::string> window_witness(const SeifertParams& sp);

std::string to_json(const TableReport& r);

}  // namespace sfhs
