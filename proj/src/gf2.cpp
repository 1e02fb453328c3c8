#include "sfhs/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace sfhs::gf2 {

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.n_ != n_) throw std::logic_error("gf2: dimension mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::any() const {
    for (uint64_t x : w_)
        if (x) return true;
    return false;
}

size_t BitVec::first() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + static_cast<size_t>(std::countr_zero(w_[i]));
    return n_;
}

size_t BitVec::count() const {
    size_t c = 0;
    for (uint64_t x : w_) c += static_cast<size_t>(std::popcount(x));
    return c;
}

void Echelon::reduce_full(BitVec& v, BitVec* combo) const {
    if (v.size() != dim_) throw std::logic_error("gf2: dimension mismatch");
    for (const Row& r : rows_) {
        if (v.get(r.pivot)) {
            v ^= r.v;
            if (combo) *combo ^= r.combo;
        }
    }
}

bool Echelon::insert(const BitVec& v) {
    BitVec x = v;
    // combos are sized generously and grown when needed
    size_t k = rows_.size();
    if (k + 1 > capacity_) {
        capacity_ *= 2;
        for (Row& r : rows_) {
            BitVec c(capacity_);
            for (size_t i = 0; i < r.combo.size(); ++i)
                if (r.combo.get(i)) c.set(i);
            r.combo = c;
        }
    }
    BitVec combo(capacity_);
    reduce_full(x, &combo);
    if (!x.any()) return false;
    combo.set(k);
    size_t p = x.first();
    // keep earlier rows reduced at the new pivot so one pass suffices
    for (Row& r : rows_)
        if (r.v.get(p)) {
            r.v ^= x;
            r.combo ^= combo;
        }
    rows_.push_back({x, combo, p});
    return true;
}

bool Echelon::contains(const BitVec& v) const { return !reduce(v).any(); }

BitVec Echelon::reduce(const BitVec& v) const {
    BitVec x = v;
    reduce_full(x, nullptr);
    return x;
}

BitVec Echelon::coordinates(const BitVec& v) const {
    BitVec x = v;
    BitVec combo(capacity_);
    reduce_full(x, &combo);
    BitVec out(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i)
        if (combo.get(i)) out.set(i);
    return out;
}

std::vector<BitVec> kernel(size_t n, const std::vector<BitVec>& images, size_t codim) {
    if (images.size() != n) throw std::logic_error("gf2: image count mismatch");
    struct Piv {
        BitVec img, src;
        size_t pivot;
    };
    std::vector<Piv> piv;
    std::vector<BitVec> ker;
    for (size_t i = 0; i < n; ++i) {
        BitVec img = images[i];
        if (img.size() != codim) throw std::logic_error("gf2: codomain mismatch");
        BitVec src(n);
        src.set(i);
        for (const Piv& p : piv)
            if (img.get(p.pivot)) {
                img ^= p.img;
                src ^= p.src;
            }
        if (!img.any()) {
            ker.push_back(src);
            continue;
        }
        size_t pv = img.first();
        for (Piv& p : piv)
            if (p.img.get(pv)) {
                p.img ^= img;
                p.src ^= src;
            }
        piv.push_back({img, src, pv});
    }
    return ker;
}

BitVec apply(const std::vector<BitVec>& images, size_t codim, const BitVec& x) {
    BitVec y(codim);
    for (size_t i = 0; i < images.size(); ++i)
        if (x.get(i)) y ^= images[i];
    return y;
}

}  // namespace sfhs::gf2
