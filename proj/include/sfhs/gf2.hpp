// Dense linear algebra over the two-element field, sized for the per-grading blocks of a
// truncated mapping cone (tens of generators, not thousands).
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sfhs::gf2 {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i, bool v = true) {
        if (v) w_[i >> 6] |= uint64_t{1} << (i & 63);
        else w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }
    BitVec& operator^=(const BitVec& o);
    bool any() const;
    // lowest set index, or size() when zero
    size_t first() const;
    size_t count() const;
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Incrementally built row-echelon basis. Each stored row remembers which inserted vectors
// it combines, so a reduction can report coordinates in terms of the inserted basis.
class Echelon {
public:
    explicit Echelon(size_t dim) : dim_(dim) {}

    // false when v is already in the span
    bool insert(const BitVec& v);
    bool contains(const BitVec& v) const;
    // v minus its projection: zero iff v in span
    BitVec reduce(const BitVec& v) const;
    // coordinates (over the independent inserted vectors, in insertion order) of the part
    // of v that was cancelled by reduce
    BitVec coordinates(const BitVec& v) const;
    size_t rank() const { return rows_.size(); }
    size_t dim() const { return dim_; }

private:
    struct Row {
        BitVec v;
        BitVec combo;  // over inserted independent vectors
        size_t pivot;
    };
    void reduce_full(BitVec& v, BitVec* combo) const;
    size_t dim_;
    std::vector<Row> rows_;
    size_t capacity_ = 64;
};

// Kernel of the linear map sending basis vector i of an n-dimensional space to images[i].
std::vector<BitVec> kernel(size_t n, const std::vector<BitVec>& images, size_t codim);

// image of x under the map whose basis images are given
BitVec apply(const std::vector<BitVec>& images, size_t codim, const BitVec& x);

}  // namespace sfhs::gf2
