// Knot-Floer-derived input for the surgery formula: genus, V-sequence and the reduced
// summands of A_k⁺ with their U-action and the reduced parts of v_k, h_k.
//
// JSON schema:
//   {
//     "genus": 1,
//     "V": [V_0, ..., V_g],
//     "reduced": [
//       { "k": 0,
//         "generators": [ {"name": "x", "twice_level": 0, "v": false, "h": false}, ... ],
//         "U": [ ["from", "to"], ... ] }
//     ]
//   }
// twice_level is 2·level above the bottom of A_k's tower (odd = half level). "v": true means
// v_k sends the generator onto the tower class at twice-level twice_level − 2V_k of B⁺;
// "h" likewise with H_k. Absent k means an empty reduced summand.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sfhs {

// Finite graded module over F[U]/(nilpotent): generators with twice-levels and the
// nonzero entries of U as (from, to) index pairs.
struct GradedModuleSpec {
    std::vector<std::string> names;
    std::vector<int64_t> twice_level;
    std::vector<std::pair<size_t, size_t>> U;

    size_t rank() const { return names.size(); }
    // smallest m with U^m = 0
    int64_t u_order() const;
};

struct ReducedSummand {
    GradedModuleSpec module;
    std::vector<bool> v, h;  // per generator
};

struct KnotFloerInput {
    int64_t genus = 0;
    std::vector<int64_t> V;                  // V_0..V_g
    std::map<int64_t, ReducedSummand> reduced;

    // V_k for any k: V_k = 0 for k >= g, V_{−k} = V_k + k
    int64_t Vk(int64_t k) const;
    // H_k = V_k + k
    int64_t Hk(int64_t k) const { return Vk(k) + k; }
    const ReducedSummand* summand(int64_t k) const;
};

// Every violated constraint, each naming the offending k. Empty when valid.
std::vector<std::string> validation_errors(const KnotFloerInput& in);
// throws InvalidInput listing validation_errors
void validate_input(const KnotFloerInput& in);

// throws InvalidInput on malformed documents (not on constraint violations)
KnotFloerInput parse_knot_input(const std::string& json_text);
KnotFloerInput load_knot_input(const std::string& path);
std::string to_json(const KnotFloerInput& in);

}  // namespace sfhs
