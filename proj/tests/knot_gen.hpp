// Random admissible knot inputs for property tests.
#pragma once

#include <random>
#include <string>

#include "sfhs/knot_input.hpp"

namespace gen {

inline sfhs::KnotFloerInput lspace(std::vector<int64_t> V) {
    sfhs::KnotFloerInput in;
    in.genus = static_cast<int64_t>(V.size()) - 1;
    in.V = std::move(V);
    return in;
}

// genus one: U = 0 on the reduced part, v/h only on level-0 generators when V₀ = 0
inline sfhs::KnotFloerInput random_genus1(std::mt19937_64& rng, int max_rank = 3) {
    sfhs::KnotFloerInput in = lspace({static_cast<int64_t>(rng() % 2), 0});
    int r = static_cast<int>(rng() % (max_rank + 1));
    if (r == 0) return in;
    sfhs::ReducedSummand s;
    for (int j = 0; j < r; ++j) {
        int64_t tl = 2 * static_cast<int64_t>(rng() % 4);
        if (in.V[0] == 1 && tl == 2) tl = 4;
        bool at0 = tl == 0 && in.V[0] == 0;
        s.module.names.push_back("x" + std::to_string(j));
        s.module.twice_level.push_back(tl);
        s.v.push_back(at0 && rng() % 2);
        s.h.push_back(at0 && rng() % 2);
    }
    in.reduced[0] = s;
    return in;
}

}  // namespace gen
