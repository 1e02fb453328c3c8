// Truncated mapping cone for positive rational surgery: ⊕ A⁺_{⌊(i+pn)/q⌋} → ⊕ B⁺ with v into
// copy n and h into copy n+1, over the two-element field. Positive slope makes D⁺ surjective,
// so HF⁺ of the surgery is the kernel, computed grading by grading.
//
// Gradings are twice-levels. A-copy j's tower sits at gr_j + 2t, B-copy j's at its own
// offset; offsets are chosen so v and h preserve the twice-level, starting from gr_0 = 0.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sfhs/knot_input.hpp"

namespace sfhs {

// tower ceiling never stabilized (internal)
struct StabilizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConeA {
    int64_t n = 0;  // copy index
    int64_t k = 0;  // ⌊(i + pn)/q⌋
    int64_t gr = 0; // twice-level of the tower bottom
};

struct ConeB {
    int64_t gr = 0;
};

// After truncation: copies with |k| <= g − 1. B-copy j sits between A-copies j and j+1,
// receiving h from a[j] and v from a[j+1].
struct TruncatedCone {
    KnotFloerInput input;
    int64_t p = 1, q = 1, i = 0;
    std::vector<ConeA> a;
    std::vector<ConeB> b;
};

// throws InvalidInput for nonpositive slopes, gcd(p, q) != 1 or i outside [0, p)
TruncatedCone build_truncated_cone(const KnotFloerInput& in, int64_t p, int64_t q, int64_t i = 0);

struct SurgeryHomology {
    int64_t tower_bottom = 0;      // always 0: red levels are relative to the tower bottom
    int64_t raw_tower_bottom = 0;  // before normalization, relative to the first A-copy's tower
    GradedModuleSpec red;          // HF_red with the induced U
    int64_t u_order = 0;
    int64_t ceiling = 0;           // tower ceiling T that was accepted
    std::map<int64_t, int64_t> rank_by_grading;  // normalized twice-level -> rank

    int64_t red_rank() const { return static_cast<int64_t>(red.rank()); }
};

bool same_homology(const SurgeryHomology& x, const SurgeryHomology& y);

// Kernel at a fixed ceiling T (towers cut at max A offset + T), reported for gradings up to
// max A offset + T/2. Throws StabilizationError if the tower image is not a single tower there.
SurgeryHomology surgery_homology_at(const TruncatedCone& cone, int64_t T);

// Starts at T = 2(g + V₀ + q + max reduced twice-level + 4) + spread of offsets, doubles
// until the results at T and T+2 agree, capped at 2¹⁰.
SurgeryHomology surgery_homology(const TruncatedCone& cone);

// Twice-levels (source, target) of every nonzero entry of D⁺ with source below the ceiling,
// enumerated entry by entry; homogeneity means source == target throughout.
std::vector<std::pair<int64_t, int64_t>> differential_gradings(const TruncatedCone& cone, int64_t T);

struct Genus1Row {
    int64_t n = 0;
    int64_t red_rank = 0;
    int64_t u_order = 0;
    bool ok = true;  // u_order <= 1
};

// 1/n surgery for n = 1..n_max; input must be valid and of genus one
std::vector<Genus1Row> genus1_check(const KnotFloerInput& in, int64_t n_max);

// HF_red of ±1 surgery on a genus-one knot is the reduced part of A₀⁺; U acts as zero on it.
GradedModuleSpec pm_one_surgery_red(const KnotFloerInput& in);

std::string to_json(const SurgeryHomology& h);

}  // namespace sfhs
