// SplitMix64 (Steele, Lea, Flood 2014) with its published constants. Chosen over the
// standard engines because its output sequence is fixed by the algorithm alone, so
// sampled reports are identical on every platform and standard library.
#pragma once

#include <cstdint>

namespace sfhs {

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1, by rejection (no modulo bias)
    uint64_t below(uint64_t n);

private:
    uint64_t state_;
};

// stable seed for a sub-stream, e.g. per table cell
uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b = 0);

}  // namespace sfhs
