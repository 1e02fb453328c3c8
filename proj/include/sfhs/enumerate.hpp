// Enumeration of admissible fiber tuples (strictly increasing, pairwise coprime).
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace sfhs {

using TupleFn = std::function<void(const std::vector<int64_t>&)>;

// every tuple of length l with product <= max_product, in lexicographic order
void for_each_tuple_by_product(int l, int64_t max_product, const TupleFn& fn);

// every tuple (any length >= 3) with 0 < N₀ <= max_n0 when positive_only, else N₀ <= max_n0,
// ordered by length and then lexicographically. Uses that N₀ grows in every p_i.
void for_each_tuple_by_n0(int64_t max_n0, const TupleFn& fn, bool positive_only = false);

std::vector<std::vector<int64_t>> tuples_by_product(int l, int64_t max_product);

// N₀ of a real-valued tuple, as a 128-bit exact integer for integer input
__int128 n0_of(const std::vector<int64_t>& p);

}  // namespace sfhs
