#include "sfhs/prng.hpp"

namespace sfhs {

uint64_t SplitMix64::below(uint64_t n) {
    // reject the top sliver that would make some residues more likely
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        uint64_t x = next();
        if (x < limit) return x % n;
    }
}

uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b) {
    SplitMix64 g(seed ^ (a * 0xD1B54A32D192ED03ULL) ^ (b * 0x8CB92BA72F3D8DD7ULL));
    return g.next();
}

}  // namespace sfhs
