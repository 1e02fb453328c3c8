#include "sfhs/mapping_cone.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "sfhs/arith.hpp"
#include "sfhs/gf2.hpp"

namespace sfhs {

TruncatedCone build_truncated_cone(const KnotFloerInput& in, int64_t p, int64_t q, int64_t i) {
    if (p <= 0 || q <= 0) throw InvalidInput("surgery slope must be positive (use mirror data for negative slopes)");
    if (std::gcd(p, q) != 1) throw InvalidInput("slope p/q must be in lowest terms");
    if (i < 0 || i >= p) throw InvalidInput("spin^c index must lie in [0, p)");
    validate_input(in);
    const int64_t g = in.genus;
    TruncatedCone c;
    c.input = in;
    c.p = p;
    c.q = q;
    c.i = i;
    // copies with −(g−1) <= ⌊(i+pn)/q⌋ <= g−1; v_k (k >= g) and h_k (k <= −g) are isomorphisms
    // and cancel the rest in pairs
    const int64_t lo = static_cast<int64_t>(ceil_div(-(g - 1) * q - i, p));
    const int64_t hi = static_cast<int64_t>(floor_div(g * q - i - 1, p));
    int64_t gr = 0;
    for (int64_t n = lo; n <= hi; ++n) {
        int64_t k = static_cast<int64_t>(floor_div(i + p * n, q));
        if (!c.a.empty()) {
            // B between the previous copy and this one: h from the left, v from the right
            const ConeA& prev = c.a.back();
            int64_t bgr = prev.gr + 2 * in.Hk(prev.k);
            c.b.push_back({bgr});
            gr = bgr - 2 * in.Vk(k);
        }
        c.a.push_back({n, k, gr});
    }
    return c;
}

namespace {

struct AGen {
    size_t col;
    bool tower;
    size_t idx;  // tower exponent or reduced generator index
};

struct Block {
    std::vector<AGen> gens;
    std::map<std::pair<size_t, int64_t>, size_t> pos;  // (col, tower ? −1 : red idx) -> position
    std::vector<gf2::BitVec> ker;
};

struct ConeView {
    const TruncatedCone& c;
    std::vector<const ReducedSummand*> red;  // per A-copy
    int64_t xmin = 0, amax = 0, amin = 0;

    explicit ConeView(const TruncatedCone& cone) : c(cone) {
        amax = amin = c.a.front().gr;
        xmin = amin;
        for (const ConeA& a : c.a) {
            const ReducedSummand* s = c.input.summand(a.k);
            red.push_back(s);
            amax = std::max(amax, a.gr);
            amin = std::min(amin, a.gr);
            xmin = std::min(xmin, a.gr);
            if (s)
                for (int64_t l : s->module.twice_level) xmin = std::min(xmin, a.gr + l);
        }
    }

    static int64_t key(const AGen& g) { return g.tower ? -1 : static_cast<int64_t>(g.idx); }

    Block block(int64_t x) const {
        Block b;
        for (size_t j = 0; j < c.a.size(); ++j) {
            int64_t d = x - c.a[j].gr;
            if (d >= 0 && d % 2 == 0) b.gens.push_back({j, true, static_cast<size_t>(d / 2)});
            if (red[j])
                for (size_t r = 0; r < red[j]->module.rank(); ++r)
                    if (c.a[j].gr + red[j]->module.twice_level[r] == x) b.gens.push_back({j, false, r});
        }
        for (size_t i = 0; i < b.gens.size(); ++i) b.pos[{b.gens[i].col, key(b.gens[i])}] = i;

        // B generators at x, by column
        std::vector<int64_t> bidx(c.b.size(), -1);
        size_t nb = 0;
        for (size_t j = 0; j < c.b.size(); ++j) {
            int64_t d = x - c.b[j].gr;
            if (d >= 0 && d % 2 == 0) bidx[j] = static_cast<int64_t>(nb++);
        }
        std::vector<gf2::BitVec> img;
        for (const AGen& g : b.gens) {
            gf2::BitVec y(nb);
            bool v = g.tower || red[g.col]->v[g.idx];
            bool h = g.tower || red[g.col]->h[g.idx];
            if (v && g.col >= 1 && bidx[g.col - 1] >= 0) y.flip(static_cast<size_t>(bidx[g.col - 1]));
            if (h && g.col < c.b.size() && bidx[g.col] >= 0) y.flip(static_cast<size_t>(bidx[g.col]));
            img.push_back(y);
        }
        b.ker = gf2::kernel(b.gens.size(), img, nb);
        return b;
    }

    // U from the block at x to the block at x − 2
    gf2::BitVec U(const Block& from, const Block& to, const gf2::BitVec& v) const {
        gf2::BitVec out(to.gens.size());
        for (size_t i = 0; i < from.gens.size(); ++i) {
            if (!v.get(i)) continue;
            const AGen& g = from.gens[i];
            if (g.tower) {
                if (g.idx > 0) out.flip(to.pos.at({g.col, -1}));
            } else {
                for (auto [f, t] : red[g.col]->module.U)
                    if (f == g.idx) out.flip(to.pos.at({g.col, static_cast<int64_t>(t)}));
            }
        }
        return out;
    }
};

}  // namespace

SurgeryHomology surgery_homology_at(const TruncatedCone& cone, int64_t T) {
    if (cone.a.empty()) throw InvalidInput("empty cone");
    ConeView cv(cone);
    const int64_t top = cv.amax + T;
    const int64_t window = cv.amax + T / 2;
    if (top - 2 < cv.xmin) throw StabilizationError("tower ceiling below the lowest generator");

    const size_t nx = static_cast<size_t>(top - cv.xmin + 1);
    std::vector<Block> blocks;
    blocks.reserve(nx);
    for (int64_t x = cv.xmin; x <= top; ++x) blocks.push_back(cv.block(x));
    auto blk = [&](int64_t x) -> const Block& { return blocks[static_cast<size_t>(x - cv.xmin)]; };

    // image of U^M(ker at the ceiling), carried down one step at a time
    std::vector<std::vector<gf2::BitVec>> image(nx);
    for (int64_t y0 : {top, top - 1}) {
        std::vector<gf2::BitVec> S = blk(y0).ker;
        image[static_cast<size_t>(y0 - cv.xmin)] = S;
        for (int64_t y = y0 - 2; y >= cv.xmin; y -= 2) {
            gf2::Echelon e(blk(y).gens.size());
            std::vector<gf2::BitVec> next;
            for (const auto& s : S) {
                gf2::BitVec u = cv.U(blk(y + 2), blk(y), s);
                if (e.insert(u)) next.push_back(u);
            }
            S = std::move(next);
            image[static_cast<size_t>(y - cv.xmin)] = S;
        }
    }

    // one tower: the image is a line in every grading of one parity from the bottom up
    int64_t bottom = INT64_MAX;
    for (int64_t x = cv.xmin; x <= window; ++x)
        if (!image[static_cast<size_t>(x - cv.xmin)].empty()) {
            bottom = x;
            break;
        }
    if (bottom == INT64_MAX) throw StabilizationError("no tower below the reporting window");
    for (int64_t x = bottom; x <= window; ++x) {
        size_t d = image[static_cast<size_t>(x - cv.xmin)].size();
        size_t want = (x - bottom) % 2 == 0 ? 1 : 0;
        if (d != want)
            throw StabilizationError("tower image has rank " + std::to_string(d) + " at twice-level " +
                                     std::to_string(x) + " (ceiling " + std::to_string(T) + ")");
    }

    // red = ker / image, with complement representatives
    struct RedAt {
        gf2::Echelon ech{0};
        size_t n_image = 0;
        std::vector<gf2::BitVec> reps;
        size_t first_id = 0;
    };
    std::vector<RedAt> red(nx);
    SurgeryHomology h;
    h.ceiling = T;
    h.raw_tower_bottom = bottom;
    for (int64_t x = cv.xmin; x <= window; ++x) {
        RedAt& r = red[static_cast<size_t>(x - cv.xmin)];
        r.ech = gf2::Echelon(blk(x).gens.size());
        for (const auto& v : image[static_cast<size_t>(x - cv.xmin)]) r.ech.insert(v);
        r.n_image = r.ech.rank();
        for (const auto& v : blk(x).ker)
            if (r.ech.insert(v)) r.reps.push_back(v);
        r.first_id = h.red.rank();
        for (size_t i = 0; i < r.reps.size(); ++i) {
            h.red.names.push_back("r" + std::to_string(x - bottom) + "." + std::to_string(i));
            h.red.twice_level.push_back(x - bottom);
        }
        if (!r.reps.empty()) h.rank_by_grading[x - bottom] = static_cast<int64_t>(r.reps.size());
    }
    for (int64_t x = cv.xmin + 2; x <= window; ++x) {
        const RedAt& r = red[static_cast<size_t>(x - cv.xmin)];
        const RedAt& d = red[static_cast<size_t>(x - 2 - cv.xmin)];
        for (size_t i = 0; i < r.reps.size(); ++i) {
            gf2::BitVec u = cv.U(blk(x), blk(x - 2), r.reps[i]);
            gf2::BitVec co = d.ech.coordinates(u);
            for (size_t j = d.n_image; j < co.size(); ++j)
                if (co.get(j)) h.red.U.emplace_back(r.first_id + i, d.first_id + (j - d.n_image));
        }
    }
    h.u_order = h.red.u_order();
    return h;
}

bool same_homology(const SurgeryHomology& x, const SurgeryHomology& y) {
    return x.raw_tower_bottom == y.raw_tower_bottom && x.red.names == y.red.names &&
           x.red.twice_level == y.red.twice_level && x.red.U == y.red.U && x.u_order == y.u_order;
}

SurgeryHomology surgery_homology(const TruncatedCone& cone) {
    if (cone.a.empty()) throw InvalidInput("empty cone");
    const KnotFloerInput& in = cone.input;
    int64_t maxred = 0;
    for (const auto& [k, s] : in.reduced)
        for (int64_t l : s.module.twice_level) maxred = std::max(maxred, l);
    int64_t amax = cone.a.front().gr, amin = amax;
    for (const ConeA& a : cone.a) amax = std::max(amax, a.gr), amin = std::min(amin, a.gr);
    int64_t T = 2 * (in.genus + in.Vk(0) + cone.q + maxred + 4) + (amax - amin);
    T += T % 2;
    constexpr int64_t kCap = int64_t{1} << 10;
    std::string last;
    for (; T <= kCap; T *= 2) {
        try {
            SurgeryHomology a = surgery_homology_at(cone, T);
            SurgeryHomology b = surgery_homology_at(cone, T + 2);
            // compare on the smaller window
            const int64_t w = amax + T / 2 - a.raw_tower_bottom;
            auto cut = [w](SurgeryHomology s) {
                GradedModuleSpec r;
                std::vector<size_t> keep(s.red.rank(), SIZE_MAX);
                for (size_t i = 0; i < s.red.rank(); ++i)
                    if (s.red.twice_level[i] <= w) {
                        keep[i] = r.rank();
                        r.names.push_back(s.red.names[i]);
                        r.twice_level.push_back(s.red.twice_level[i]);
                    }
                for (auto [f, t] : s.red.U)
                    if (keep[f] != SIZE_MAX && keep[t] != SIZE_MAX) r.U.emplace_back(keep[f], keep[t]);
                s.red = r;
                s.u_order = r.u_order();
                return s;
            };
            if (same_homology(a, cut(b))) return a;
            last = "results at T=" + std::to_string(T) + " and T+2 differ";
        } catch (const StabilizationError& e) {
            last = e.what();
        }
    }
    throw StabilizationError("tower ceiling did not stabilize up to 2^10: " + last);
}

std::vector<std::pair<int64_t, int64_t>> differential_gradings(const TruncatedCone& cone, int64_t T) {
    const KnotFloerInput& in = cone.input;
    std::vector<std::pair<int64_t, int64_t>> out;
    const size_t nb = cone.b.size();
    for (size_t j = 0; j < cone.a.size(); ++j) {
        const ConeA& a = cone.a[j];
        const int64_t V = in.Vk(a.k), H = in.Hk(a.k);
        // tower: a^t -> b^{t−V} in copy j−1 and b^{t−H} in copy j, each at its copy's offset
        for (int64_t t = 0; a.gr + 2 * t <= a.gr + T; ++t) {
            if (j >= 1 && t >= V) out.emplace_back(a.gr + 2 * t, cone.b[j - 1].gr + 2 * (t - V));
            if (j < nb && t >= H) out.emplace_back(a.gr + 2 * t, cone.b[j].gr + 2 * (t - H));
        }
        if (const ReducedSummand* s = in.summand(a.k))
            for (size_t r = 0; r < s->module.rank(); ++r) {
                const int64_t m = s->module.twice_level[r];
                if (s->v[r] && j >= 1) out.emplace_back(a.gr + m, cone.b[j - 1].gr + (m - 2 * V));
                if (s->h[r] && j < nb) out.emplace_back(a.gr + m, cone.b[j].gr + (m - 2 * H));
            }
    }
    return out;
}

std::vector<Genus1Row> genus1_check(const KnotFloerInput& in, int64_t n_max) {
    if (in.genus != 1) throw InvalidInput("genus1_check needs a genus-one input");
    std::vector<Genus1Row> rows;
    for (int64_t n = 1; n <= n_max; ++n) {
        SurgeryHomology h = surgery_homology(build_truncated_cone(in, 1, n, 0));
        rows.push_back({n, h.red_rank(), h.u_order, h.u_order <= 1});
    }
    return rows;
}

GradedModuleSpec pm_one_surgery_red(const KnotFloerInput& in) {
    if (in.genus != 1) throw InvalidInput("pm_one_surgery_red needs a genus-one input");
    validate_input(in);
    const ReducedSummand* s = in.summand(0);
    GradedModuleSpec m = s ? s->module : GradedModuleSpec{};
    if (m.u_order() > 1) throw InvalidInput("U does not vanish on the reduced part of A_0");
    return m;
}

std::string to_json(const SurgeryHomology& h) {
    nlohmann::ordered_json j;
    j["red_rank"] = h.red_rank();
    j["u_order"] = h.u_order;
    j["tower_bottom"] = h.tower_bottom;
    nlohmann::ordered_json rk = nlohmann::ordered_json::object();
    for (auto [g, r] : h.rank_by_grading) rk[std::to_string(g)] = r;
    j["rank_by_twice_level"] = rk;
    auto U = nlohmann::ordered_json::array();
    for (auto [f, t] : h.red.U) U.push_back({h.red.names[f], h.red.names[t]});
    j["U"] = U;
    j["ceiling"] = h.ceiling;
    return j.dump();
}

}  // namespace sfhs
