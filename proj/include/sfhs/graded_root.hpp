// Graded roots as sublevel-set merge trees of τ, their reduced module ℍ_red and U-action.
//
// Convention: the infinite ray points to large gradings. Vertices at grading g are the
// maximal runs of indices with τ <= g; every vertex has a unique neighbour at g+1, and U
// moves a class one step towards the ray. The trunk is the path through the leftmost
// global minimum of τ.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sfhs/seifert.hpp"

namespace sfhs {

// A maximal chain of vertices created by one local minimum of τ. It holds the vertices
// at gradings leaf .. death-1 and hangs off `parent` at grading `death`.
struct Branch {
    int64_t leaf = 0;
    int64_t death = 0;  // the trunk's death is one past the truncation grading
    int parent = -1;    // -1 for the trunk
    int64_t index = 0;  // index in τ of the minimum that created it
};

struct RootVertex {
    int branch;
    int64_t grading;
    int64_t up;  // vertex id at grading+1, -1 at the truncation top
};

class GradedRoot {
public:
    const std::vector<Branch>& branches() const { return branches_; }
    int trunk() const { return trunk_; }
    int64_t min_grading() const { return gmin_; }
    // grading from which on every fiber is a single vertex
    int64_t top() const { return top_; }

    // finite truncation: all vertices with grading <= top()+1
    std::vector<RootVertex> vertices() const;
    std::map<int64_t, int64_t> fiber_sizes() const;

    // Asserts the graded-root axioms on the truncation; throws std::logic_error.
    void check_axioms() const;

    std::string to_dot(const std::string& name = "root") const;

private:
    friend GradedRoot root_from_tau(const TauSequence& tau);
    std::vector<Branch> branches_;
    int trunk_ = 0;
    int64_t gmin_ = 0;
    int64_t top_ = 0;
};

GradedRoot root_from_tau(const TauSequence& tau);

struct HRedSummary {
    std::map<int64_t, int64_t> rank_by_grading;  // only nonzero ranks
    int64_t total_rank = 0;
    int64_t u_order = 0;
    // (merge grading, leaf grading) per non-trunk branch, sorted
    std::vector<std::pair<int64_t, int64_t>> branch_profile;
};

HRedSummary h_red(const GradedRoot& root);

bool u_power_nonzero(const GradedRoot& root, int64_t k);

// Same quantities straight from a τ list without building the tree.
// u_order = max_j (τ(j) − max(min_{i<j} τ(i), min_{i>j} τ(i))), rank = Σ drops + min τ.
struct TauStats {
    int64_t u_order = 0;
    int64_t total_rank = 0;
    int64_t tau_min = 0;
};
TauStats tau_stats(const std::vector<int64_t>& tau);

// Streaming evaluation for a Seifert tuple. Uses the palindromic symmetry of the dense
// τ (guaranteed by the antisymmetry certificate) to scan only n <= N₀/2.
struct StreamSummary {
    i128 n0 = 0;
    int64_t u_order = 0;
    int64_t total_rank = 0;
    int64_t tau_min = 0;
    int64_t steps = 0;  // Δ evaluations performed
};
StreamSummary stream_summary(const SeifertParams& sp, int64_t step_cap = INT64_MAX);

// True iff U^k·ℍ_red != 0, stopping at the first witness.
bool u_power_nonzero_stream(const SeifertParams& sp, int64_t k, int64_t step_cap = INT64_MAX);

// Sufficient test for U^k·ℍ_red != 0: some entry has value k+1 and a later one −(k+1).
bool delta_cond_probe(const std::vector<DeltaEntry>& entries, int64_t k);

// Replace the entry at (pos, sub) by `parts` (same sign, same sum).
DeltaSequence refine(const DeltaSequence& ds, int64_t pos, int32_t sub, const std::vector<int32_t>& parts);
// Collapse `count` consecutive same-sign entries starting at (pos, sub) into one.
DeltaSequence merge(const DeltaSequence& ds, int64_t pos, int32_t sub, size_t count);
// Collapse every maximal run of same-sign entries.
DeltaSequence merge_all(const DeltaSequence& ds);

}  // namespace sfhs
