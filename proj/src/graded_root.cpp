#include "sfhs/graded_root.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sfhs {

namespace {

struct Dsu {
    std::vector<int64_t> parent;
    explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int64_t find(int64_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
};

}  // namespace

GradedRoot root_from_tau(const TauSequence& tau) {
    const auto& t = tau.values;
    if (t.empty()) throw InvalidInput("empty tau sequence");
    const size_t n = t.size();

    std::vector<int64_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int64_t a, int64_t b) { return t[a] < t[b]; });

    Dsu dsu(n);
    std::vector<char> active(n, 0);
    std::vector<int> comp_branch(n, -1);  // valid at DSU roots
    std::vector<int64_t> comp_min(n);     // index of the (leftmost) minimum, at DSU roots

    struct Raw {
        Branch b;
        int64_t attach = -1;  // DSU element whose final branch becomes the parent
        bool dead = false;
    };
    std::vector<Raw> raw;

    auto elder = [&](int64_t ra, int64_t rb) {
        int64_t ia = comp_min[ra], ib = comp_min[rb];
        if (t[ia] != t[ib]) return t[ia] < t[ib];
        return ia < ib;
    };

    size_t pos = 0;
    while (pos < n) {
        int64_t g = t[order[pos]];
        std::vector<int> dying;
        size_t end = pos;
        while (end < n && t[order[end]] == g) ++end;
        for (size_t k = pos; k < end; ++k) {
            int64_t i = order[k];
            active[i] = 1;
            comp_min[i] = i;
            comp_branch[i] = static_cast<int>(raw.size());
            raw.push_back({Branch{g, 0, -1, i}, -1, false});
            for (int64_t j : {i - 1, i + 1}) {
                if (j < 0 || j >= static_cast<int64_t>(n) || !active[j]) continue;
                int64_t ri = dsu.find(i), rj = dsu.find(j);
                if (ri == rj) continue;
                int64_t keep = elder(ri, rj) ? ri : rj;
                int64_t lose = keep == ri ? rj : ri;
                Raw& r = raw[comp_branch[lose]];
                r.b.death = g;
                r.dead = true;
                r.attach = keep;
                dying.push_back(comp_branch[lose]);
                dsu.parent[lose] = keep;
            }
        }
        for (int b : dying) raw[b].attach = comp_branch[dsu.find(raw[b].attach)];
        pos = end;
    }

    // keep branches that own at least one vertex; the survivor is the trunk
    GradedRoot root;
    std::vector<int> remap(raw.size(), -1);
    int trunk_raw = comp_branch[dsu.find(0)];
    for (size_t b = 0; b < raw.size(); ++b) {
        if (static_cast<int>(b) != trunk_raw && raw[b].b.death <= raw[b].b.leaf) continue;
        remap[b] = static_cast<int>(root.branches_.size());
        root.branches_.push_back(raw[b].b);
    }
    root.gmin_ = raw[trunk_raw].b.leaf;
    root.top_ = root.gmin_;
    for (size_t b = 0; b < raw.size(); ++b) {
        if (remap[b] < 0 || static_cast<int>(b) == trunk_raw) continue;
        Branch& br = root.branches_[remap[b]];
        br.parent = remap[raw[b].attach];
        if (br.parent < 0) throw std::logic_error("branch attached to an empty branch");
        root.top_ = std::max(root.top_, br.death);
    }
    root.trunk_ = remap[trunk_raw];
    root.branches_[root.trunk_].death = root.top_ + 2;
    root.branches_[root.trunk_].parent = -1;
    return root;
}

std::vector<RootVertex> GradedRoot::vertices() const {
    std::vector<int64_t> first(branches_.size());
    int64_t count = 0;
    for (size_t b = 0; b < branches_.size(); ++b) {
        first[b] = count;
        count += branches_[b].death - branches_[b].leaf;
    }
    std::vector<RootVertex> out;
    out.reserve(count);
    for (size_t b = 0; b < branches_.size(); ++b) {
        const Branch& br = branches_[b];
        for (int64_t g = br.leaf; g < br.death; ++g) {
            int64_t up;
            if (g + 1 < br.death) {
                up = first[b] + (g + 1 - br.leaf);
            } else if (br.parent >= 0) {
                const Branch& pb = branches_[br.parent];
                up = first[br.parent] + (g + 1 - pb.leaf);
            } else {
                up = -1;
            }
            out.push_back({static_cast<int>(b), g, up});
        }
    }
    return out;
}

std::map<int64_t, int64_t> GradedRoot::fiber_sizes() const {
    std::map<int64_t, int64_t> diff;
    for (const Branch& b : branches_) {
        diff[b.leaf] += 1;
        diff[b.death] -= 1;
    }
    std::map<int64_t, int64_t> out;
    int64_t acc = 0;
    auto it = diff.begin();
    for (int64_t g = gmin_; g <= top_ + 1; ++g) {
        while (it != diff.end() && it->first <= g) acc += (it++)->second;
        out[g] = acc;
    }
    return out;
}

void GradedRoot::check_axioms() const {
    auto vs = vertices();
    std::map<int64_t, int64_t> fib;
    int64_t tops = 0;
    for (const auto& v : vs) {
        if (v.grading < gmin_) throw std::logic_error("grading below the minimum");
        ++fib[v.grading];
        if (v.up < 0) {
            ++tops;
            if (v.grading != top_ + 1) throw std::logic_error("dangling vertex below the truncation");
            continue;
        }
        const auto& u = vs.at(v.up);
        if (u.grading - v.grading != 1) throw std::logic_error("edge does not change grading by one");
    }
    if (tops != 1) throw std::logic_error("truncation must end in a single vertex");
    for (int64_t g = top_; g <= top_ + 1; ++g)
        if (fib[g] != 1) throw std::logic_error("more than one vertex at or above the top grading");
}

std::string GradedRoot::to_dot(const std::string& name) const {
    auto vs = vertices();
    std::ostringstream os;
    os << "graph " << name << " {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
    for (size_t i = 0; i < vs.size(); ++i) {
        os << "  v" << i << " [label=\"" << vs[i].grading << "\"";
        if (vs[i].branch == trunk_) os << ", color=red, penwidth=2";
        os << "];\n";
    }
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].up < 0) continue;
        os << "  v" << i << " -- v" << vs[i].up;
        if (vs[i].branch == trunk_) os << " [color=red, penwidth=2]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

HRedSummary h_red(const GradedRoot& root) {
    HRedSummary s;
    std::map<int64_t, int64_t> diff;
    const auto& bs = root.branches();
    for (size_t b = 0; b < bs.size(); ++b) {
        if (static_cast<int>(b) == root.trunk()) continue;
        const Branch& br = bs[b];
        diff[br.leaf] += 1;
        diff[br.death] -= 1;
        s.total_rank += br.death - br.leaf;
        s.branch_profile.emplace_back(br.death, br.leaf);
        // children are younger, so the longest path to the trunk starts at a direct child
        if (br.parent == root.trunk()) s.u_order = std::max(s.u_order, br.death - br.leaf);
    }
    int64_t acc = 0;
    for (auto it = diff.begin(); it != diff.end(); ++it) {
        acc += it->second;
        auto nx = std::next(it);
        if (acc == 0 || nx == diff.end()) continue;
        for (int64_t g = it->first; g < nx->first; ++g) s.rank_by_grading[g] = acc;
    }
    std::sort(s.branch_profile.begin(), s.branch_profile.end());
    return s;
}

bool u_power_nonzero(const GradedRoot& root, int64_t k) { return h_red(root).u_order > k; }

TauStats tau_stats(const std::vector<int64_t>& t) {
    TauStats s;
    if (t.empty()) return s;
    const size_t n = t.size();
    std::vector<int64_t> suf(n);
    suf[n - 1] = t[n - 1];
    for (size_t i = n - 1; i-- > 0;) suf[i] = std::min(suf[i + 1], t[i]);
    int64_t pre = t[0], drops = 0;
    for (size_t j = 1; j < n; ++j) {
        if (t[j] < t[j - 1]) drops += t[j - 1] - t[j];
        if (j + 1 < n) s.u_order = std::max(s.u_order, t[j] - std::max(pre, suf[j + 1]));
        pre = std::min(pre, t[j]);
    }
    s.tau_min = suf[0];
    s.total_rank = drops - (t[0] - s.tau_min);
    return s;
}

namespace {

// Walks T(j) = Σ_{m<j} Δ(m) for j = 1..⌊(N₀+1)/2⌋. Returns false if stopped early.
template <class OnStep>
bool walk_half(const SeifertParams& sp, const DiophantineSolution& sol, int64_t step_cap, OnStep&& on_step) {
    i128 N0 = n0(sp);
    if (!antisymmetry_certificate(sp, sol)) throw std::logic_error("antisymmetry certificate failed");
    int64_t half = to_i64((N0 + 1) / 2);
    if (half > step_cap) throw CapExceeded("half-range scan of " + std::to_string(half) + " steps exceeds the cap");
    constexpr int kMax = 16;
    const int l = static_cast<int>(sp.l());
    if (l > kMax) throw InvalidInput("too many fibers for streaming");
    int64_t p[kMax], a[kMax], r[kMax];
    for (int i = 0; i < l; ++i) {
        if (sp.p[i] > (i128(1) << 40)) throw OverflowError("fiber too large for 64-bit stepping");
        p[i] = static_cast<int64_t>(sp.p[i]);
        a[i] = static_cast<int64_t>(sol.pprime[i]);
        r[i] = 0;
    }
    const int64_t e = to_i64(abs128(sol.e0));
    int64_t delta = 1, tau = 0;
    for (int64_t j = 1; j <= half; ++j) {
        // delta = Δ(j−1)
        int64_t prev = tau;
        tau += delta;
        if (!on_step(j, prev, tau, delta)) return false;
        int64_t d = e;
        for (int i = 0; i < l; ++i) {
            int64_t s = r[i] + a[i];
            int64_t c = s >= p[i];
            s -= c * p[i];
            d -= c + (s > 0) - (r[i] > 0);
            r[i] = s;
        }
        delta += d;
    }
    return true;
}

}  // namespace

StreamSummary stream_summary(const SeifertParams& sp, int64_t step_cap) {
    DiophantineSolution sol = solve_diophantine(sp);
    StreamSummary s;
    s.n0 = n0(sp);
    if (s.n0 <= 0) return s;
    int64_t run_min = 0, last = 0, abs_sum = 0;
    walk_half(sp, sol, step_cap, [&](int64_t, int64_t prev, int64_t tau, int64_t delta) {
        run_min = std::min(run_min, prev);
        s.u_order = std::max(s.u_order, tau - run_min);
        abs_sum += delta < 0 ? -delta : delta;
        last = tau;
        ++s.steps;
        return true;
    });
    s.tau_min = std::min(run_min, last);
    s.total_rank = abs_sum + s.tau_min;
    return s;
}

bool u_power_nonzero_stream(const SeifertParams& sp, int64_t k, int64_t step_cap) {
    DiophantineSolution sol = solve_diophantine(sp);
    i128 N0 = n0(sp);
    if (N0 <= 0) return false;
    int64_t run_min = 0;
    bool found = false;
    walk_half(sp, sol, step_cap, [&](int64_t, int64_t prev, int64_t tau, int64_t) {
        run_min = std::min(run_min, prev);
        if (tau - run_min > k) found = true;
        return !found;
    });
    return found;
}

bool delta_cond_probe(const std::vector<DeltaEntry>& entries, int64_t k) {
    bool seen_pos = false;
    for (const auto& e : entries) {
        if (e.value == k + 1) seen_pos = true;
        else if (seen_pos && e.value == -(k + 1)) return true;
    }
    return false;
}

namespace {

size_t locate(const DeltaSequence& ds, int64_t pos, int32_t sub) {
    for (size_t i = 0; i < ds.entries.size(); ++i)
        if (ds.entries[i].pos == pos && ds.entries[i].sub == sub) return i;
    throw InvalidInput("no entry at position " + std::to_string(pos) + "." + std::to_string(sub));
}

void renumber(std::vector<DeltaEntry>& es) {
    for (size_t i = 0; i < es.size(); ++i)
        es[i].sub = (i > 0 && es[i - 1].pos == es[i].pos) ? es[i - 1].sub + 1 : 0;
}

}  // namespace

DeltaSequence refine(const DeltaSequence& ds, int64_t pos, int32_t sub, const std::vector<int32_t>& parts) {
    size_t i = locate(ds, pos, sub);
    int32_t v = ds.entries[i].value;
    if (parts.empty()) throw InvalidInput("refinement needs at least one part");
    int64_t sum = 0;
    for (int32_t x : parts) {
        if (x == 0 || (x > 0) != (v > 0)) throw InvalidInput("refinement parts must share the sign of the entry");
        sum += x;
    }
    if (sum != v) throw InvalidInput("refinement parts must sum to the entry");
    DeltaSequence out;
    out.n0 = ds.n0;
    out.entries.assign(ds.entries.begin(), ds.entries.begin() + i);
    for (int32_t x : parts) out.entries.push_back({pos, 0, x});
    out.entries.insert(out.entries.end(), ds.entries.begin() + i + 1, ds.entries.end());
    renumber(out.entries);
    return out;
}

DeltaSequence merge(const DeltaSequence& ds, int64_t pos, int32_t sub, size_t count) {
    size_t i = locate(ds, pos, sub);
    if (count == 0 || i + count > ds.entries.size()) throw InvalidInput("merge range out of bounds");
    bool positive = ds.entries[i].value > 0;
    int64_t sum = 0;
    for (size_t j = i; j < i + count; ++j) {
        if ((ds.entries[j].value > 0) != positive) throw InvalidInput("merge needs entries of one sign");
        sum += ds.entries[j].value;
    }
    DeltaSequence out;
    out.n0 = ds.n0;
    out.entries.assign(ds.entries.begin(), ds.entries.begin() + i);
    out.entries.push_back({ds.entries[i].pos, 0, static_cast<int32_t>(sum)});
    out.entries.insert(out.entries.end(), ds.entries.begin() + i + count, ds.entries.end());
    renumber(out.entries);
    return out;
}

DeltaSequence merge_all(const DeltaSequence& ds) {
    DeltaSequence out;
    out.n0 = ds.n0;
    for (const auto& e : ds.entries) {
        if (!out.entries.empty() && (out.entries.back().value > 0) == (e.value > 0))
            out.entries.back().value += e.value;
        else
            out.entries.push_back({e.pos, 0, e.value});
    }
    renumber(out.entries);
    return out;
}

}  // namespace sfhs
