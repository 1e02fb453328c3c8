#include "sfhs/seifert.hpp"

#include <algorithm>
#include <string>

namespace sfhs {

SeifertParams SeifertParams::make(std::vector<i128> fibers) {
    if (fibers.size() < 3) throw InvalidInput("need at least 3 singular fibers");
    for (size_t i = 0; i < fibers.size(); ++i) {
        if (fibers[i] < 2) throw InvalidInput("fiber multiplicities must be >= 2");
        if (i > 0 && fibers[i] <= fibers[i - 1])
            throw InvalidInput("fiber multiplicities must be strictly increasing");
    }
    for (size_t i = 0; i < fibers.size(); ++i)
        for (size_t j = i + 1; j < fibers.size(); ++j)
            if (gcd128(fibers[i], fibers[j]) != 1)
                throw InvalidInput("not pairwise coprime: " + to_string(fibers[i]) + " and " +
                                   to_string(fibers[j]));
    SeifertParams sp;
    sp.P = 1;
    for (i128 x : fibers) sp.P = mul_ck(sp.P, x);
    sp.p = std::move(fibers);
    return sp;
}

SeifertParams SeifertParams::make(const std::vector<int64_t>& fibers) {
    return make(std::vector<i128>(fibers.begin(), fibers.end()));
}

DiophantineSolution solve_diophantine(const SeifertParams& sp) {
    DiophantineSolution sol;
    sol.pprime.reserve(sp.l());
    i128 s = 0;
    for (i128 p : sp.p) {
        i128 cof = sp.P / p;
        i128 x = mod_pos(-mod_inverse(cof % p, p), p);
        if (x == 0) x = p;  // representative in (0, p]; only reachable for p = 1
        sol.pprime.push_back(x);
        s = add_ck(s, mul_ck(x, cof));
    }
    i128 num = sub_ck(-1, s);
    if (num % sp.P != 0) throw std::logic_error("Diophantine equation has no integral e0");
    sol.e0 = num / sp.P;
    return sol;
}

i128 diophantine_residual(const SeifertParams& sp, const DiophantineSolution& sol) {
    i128 r = add_ck(mul_ck(sol.e0, sp.P), 1);
    for (size_t i = 0; i < sp.l(); ++i) r = add_ck(r, mul_ck(sol.pprime[i], sp.P / sp.p[i]));
    return r;
}

i128 n0(const SeifertParams& sp) {
    i128 r = mul_ck(sp.P, static_cast<i128>(sp.l()) - 2);
    for (i128 p : sp.p) r = sub_ck(r, sp.P / p);
    return r;
}

i128 delta_at(const SeifertParams& sp, const DiophantineSolution& sol, i128 n) {
    if (n < 0) throw InvalidInput("delta_at needs n >= 0");
    i128 v = add_ck(1, mul_ck(abs128(sol.e0), n));
    for (size_t i = 0; i < sp.l(); ++i) {
        i128 num = mul_ck(n, sol.pprime[i]);
        v = sub_ck(v, ceil_div(num, sp.p[i]));
    }
    return v;
}

bool antisymmetry_certificate(const SeifertParams& sp, const DiophantineSolution& sol) {
    i128 N0 = n0(sp);
    // Δ(n) + Δ(N₀−n) = 2 + |e₀|N₀ − Σ_i (K_i + 1),  N₀p_i′ = K_i p_i + 1
    i128 f = add_ck(2, mul_ck(abs128(sol.e0), N0));
    for (size_t i = 0; i < sp.l(); ++i) {
        i128 t = sub_ck(mul_ck(N0, sol.pprime[i]), 1);
        if (mod_pos(t, sp.p[i]) != 0) return false;
        f = sub_ck(f, add_ck(floor_div(t, sp.p[i]), 1));
    }
    return f == 0;
}

void validate(const DeltaSequence& ds) {
    if (ds.entries.empty()) throw InvalidInput("empty Delta-sequence");
    if (ds.entries.front().value <= 0) throw InvalidInput("Delta-sequence must start positive");
    for (size_t i = 0; i < ds.entries.size(); ++i) {
        const auto& e = ds.entries[i];
        if (e.value == 0) throw InvalidInput("Delta-sequence values must be nonzero");
        if (e.pos < 0) throw InvalidInput("negative position");
        if (i > 0) {
            const auto& f = ds.entries[i - 1];
            if (e.pos < f.pos || (e.pos == f.pos && e.sub <= f.sub))
                throw InvalidInput("positions must be strictly increasing");
        }
    }
    if (ds.n0 > 0 && ds.entries.back().pos > ds.n0)
        throw InvalidInput("position beyond N0");
}

DeltaSequence delta_sequence(const SeifertParams& sp, int64_t cap) {
    DiophantineSolution sol = solve_diophantine(sp);
    DeltaSequence ds;
    ds.n0 = n0(sp);
    if (ds.n0 <= 0) {
        ds.entries.push_back({0, 0, 1});
        return ds;
    }
    if (ds.n0 >= cap) throw CapExceeded("N0 = " + to_string(ds.n0) + " exceeds the enumeration cap");
    int64_t N0 = static_cast<int64_t>(ds.n0);
    DeltaStepper st(sp, sol);
    size_t last_negative = 0;
    for (;;) {
        int64_t v = st.value();
        if (v != 0) {
            ds.entries.push_back({st.n(), 0, static_cast<int32_t>(v)});
            if (v < 0) last_negative = ds.entries.size();
        }
        if (st.n() == N0) break;
        st.advance();
    }
    if (last_negative > 0) ds.entries.resize(last_negative);
    return ds;
}

TauSequence tau_from_delta(const DeltaSequence& ds) {
    TauSequence t;
    t.values.reserve(ds.entries.size() + 1);
    int64_t acc = 0;
    t.values.push_back(0);
    for (const auto& e : ds.entries) {
        acc += e.value;
        t.values.push_back(acc);
    }
    return t;
}

DeltaStepper::DeltaStepper(const SeifertParams& sp, const DiophantineSolution& sol) {
    for (size_t i = 0; i < sp.l(); ++i) {
        if (sp.p[i] > (i128(1) << 40)) throw OverflowError("fiber too large for 64-bit stepping");
        fibers_.push_back({static_cast<int64_t>(sp.p[i]), static_cast<int64_t>(sol.pprime[i]), 0});
    }
    abs_e0_ = to_i64(abs128(sol.e0));
}

void DeltaStepper::advance() {
    // ⌈(n+1)a/p⌉ − ⌈na/p⌉ from the residue r = na mod p
    int64_t d = abs_e0_;
    for (auto& f : fibers_) {
        int64_t s = f.r + f.a;
        int64_t carry = s >= f.p;
        s -= carry * f.p;
        d -= carry + (s > 0) - (f.r > 0);
        f.r = s;
    }
    value_ += d;
    ++n_;
}

}  // namespace sfhs
