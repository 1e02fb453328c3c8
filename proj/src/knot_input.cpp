#include "sfhs/knot_input.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sfhs/arith.hpp"
#include "sfhs/gf2.hpp"

namespace sfhs {

int64_t GradedModuleSpec::u_order() const {
    const size_t n = rank();
    if (n == 0) return 0;
    // U as column images; iterate powers on the identity
    std::vector<gf2::BitVec> cols(n, gf2::BitVec(n));
    for (auto [f, t] : U) cols[f].flip(t);
    std::vector<gf2::BitVec> cur;
    for (size_t i = 0; i < n; ++i) {
        gf2::BitVec e(n);
        e.set(i);
        cur.push_back(e);
    }
    for (int64_t m = 0; m <= static_cast<int64_t>(n); ++m) {
        bool zero = std::none_of(cur.begin(), cur.end(), [](const gf2::BitVec& x) { return x.any(); });
        if (zero) return m;
        for (auto& x : cur) x = gf2::apply(cols, n, x);
    }
    throw InvalidInput("U is not nilpotent");
}

int64_t KnotFloerInput::Vk(int64_t k) const {
    if (k < 0) return Vk(-k) - k;
    if (k >= genus || k >= static_cast<int64_t>(V.size())) return 0;
    return V[static_cast<size_t>(k)];
}

const ReducedSummand* KnotFloerInput::summand(int64_t k) const {
    auto it = reduced.find(k);
    return it == reduced.end() ? nullptr : &it->second;
}

namespace {

// U-equivariance of a map into a tower: f(Ux) = U f(x), with f(x) the tower class at
// twice-level target(x) or zero
void check_equivariant(const ReducedSummand& s, const std::vector<bool>& f, int64_t shift, const std::string& name,
                       int64_t k, std::vector<std::string>& err) {
    const auto& M = s.module;
    const size_t n = M.rank();
    // f(Ux) as a set of tower twice-levels (mod 2 multiplicity)
    for (size_t x = 0; x < n; ++x) {
        std::map<int64_t, int> lhs, rhs;
        for (auto [from, to] : M.U)
            if (from == x && f[to]) lhs[M.twice_level[to] - shift] ^= 1;
        if (f[x] && M.twice_level[x] - shift >= 2) rhs[M.twice_level[x] - shift - 2] ^= 1;
        std::erase_if(lhs, [](const auto& p) { return p.second == 0; });
        if (lhs != rhs)
            err.push_back(name + "_" + std::to_string(k) + " is not U-equivariant at generator '" + M.names[x] + "'");
    }
}

}  // namespace

std::vector<std::string> validation_errors(const KnotFloerInput& in) {
    std::vector<std::string> err;
    const int64_t g = in.genus;
    if (g < 1) {
        err.push_back("genus must be at least 1");
        return err;
    }
    if (static_cast<int64_t>(in.V.size()) != g + 1) {
        err.push_back("V must list V_0..V_g (" + std::to_string(g + 1) + " entries), got " +
                      std::to_string(in.V.size()));
        return err;
    }
    for (int64_t k = 0; k <= g; ++k) {
        int64_t v = in.V[static_cast<size_t>(k)];
        if (v < 0) err.push_back("V_" + std::to_string(k) + " is negative");
        if (v + k > g) err.push_back("H_" + std::to_string(k) + " = V_k + k exceeds the genus at k=" + std::to_string(k));
    }
    for (int64_t k = 0; k < g; ++k) {
        int64_t a = in.V[static_cast<size_t>(k)], b = in.V[static_cast<size_t>(k + 1)];
        if (b > a)
            err.push_back("V nonincreasing violated at k=" + std::to_string(k) + ": V_" + std::to_string(k) + "=" +
                          std::to_string(a) + " < V_" + std::to_string(k + 1) + "=" + std::to_string(b));
        else if (b < a - 1)
            err.push_back("V_{k+1} >= V_k - 1 violated at k=" + std::to_string(k));
    }
    if (in.V[static_cast<size_t>(g)] != 0) err.push_back("V_g must be 0 (k=" + std::to_string(g) + ")");

    for (const auto& [k, s] : in.reduced) {
        const std::string ks = "k=" + std::to_string(k);
        const auto& M = s.module;
        const size_t n = M.rank();
        if (k <= -g || k >= g) {
            err.push_back("reduced summand outside |k| <= g-1 at " + ks);
            continue;
        }
        if (M.twice_level.size() != n || s.v.size() != n || s.h.size() != n) {
            err.push_back("inconsistent generator data at " + ks);
            continue;
        }
        std::set<std::string> seen;
        for (size_t i = 0; i < n; ++i)
            if (!seen.insert(M.names[i]).second) err.push_back("duplicate generator '" + M.names[i] + "' at " + ks);
        bool hom = true;
        for (auto [f, t] : M.U) {
            if (f >= n || t >= n) {
                err.push_back("U entry out of range at " + ks);
                hom = false;
            } else if (M.twice_level[t] != M.twice_level[f] - 2) {
                err.push_back("U not homogeneous of twice-level -2 at " + ks + " ('" + M.names[f] + "' -> '" +
                              M.names[t] + "')");
                hom = false;
            }
        }
        if (!hom) continue;
        if (M.u_order() > g) err.push_back("U^g does not vanish on the reduced summand at " + ks);

        const int64_t V = in.Vk(k), H = in.Hk(k);
        for (size_t i = 0; i < n; ++i) {
            const int64_t m = M.twice_level[i];
            if (s.v[i] && (m - 2 * V < 0 || (m - 2 * V) % 2 != 0))
                err.push_back("v_" + std::to_string(k) + " of '" + M.names[i] + "' lands below the tower or at a half level at " + ks);
            if (s.h[i] && (m - 2 * H < 0 || (m - 2 * H) % 2 != 0))
                err.push_back("h_" + std::to_string(k) + " of '" + M.names[i] + "' lands below the tower or at a half level at " + ks);
            if (k == 0 && (s.v[i] || s.h[i])) {
                // v₀, h₀ vanish on levels i < 0 and i >= V₀ + 1
                if (m < 0 || m >= 2 * (V + 1))
                    err.push_back("v_0/h_0 must vanish on '" + M.names[i] + "' (level outside [0, V_0]) at " + ks);
                // genus one with V₀ = H₀ = 1: zero on level-1 generators
                if (g == 1 && V == 1 && m == 2)
                    err.push_back("v_0/h_0 must vanish on level-1 generator '" + M.names[i] + "' when V_0 = H_0 = 1 at " + ks);
            }
        }
        check_equivariant(s, s.v, 2 * V, "v", k, err);
        check_equivariant(s, s.h, 2 * H, "h", k, err);
    }
    return err;
}

void validate_input(const KnotFloerInput& in) {
    auto err = validation_errors(in);
    if (err.empty()) return;
    std::string msg = "invalid knot input:";
    for (const auto& e : err) msg += "\n  " + e;
    throw InvalidInput(msg);
}

KnotFloerInput parse_knot_input(const std::string& text) {
    using nlohmann::json;
    KnotFloerInput in;
    try {
        json j = json::parse(text);
        in.genus = j.at("genus").get<int64_t>();
        in.V = j.at("V").get<std::vector<int64_t>>();
        if (j.contains("reduced")) {
            for (const auto& r : j.at("reduced")) {
                int64_t k = r.at("k").get<int64_t>();
                if (in.reduced.count(k)) throw InvalidInput("duplicate reduced summand k=" + std::to_string(k));
                ReducedSummand s;
                std::map<std::string, size_t> idx;
                for (const auto& gj : r.value("generators", json::array())) {
                    std::string name = gj.at("name").get<std::string>();
                    idx[name] = s.module.names.size();
                    s.module.names.push_back(name);
                    s.module.twice_level.push_back(gj.at("twice_level").get<int64_t>());
                    s.v.push_back(gj.value("v", false));
                    s.h.push_back(gj.value("h", false));
                }
                for (const auto& u : r.value("U", json::array())) {
                    auto pr = u.get<std::vector<std::string>>();
                    if (pr.size() != 2) throw InvalidInput("U entries are [from, to] pairs");
                    auto f = idx.find(pr[0]), t = idx.find(pr[1]);
                    if (f == idx.end() || t == idx.end())
                        throw InvalidInput("U entry names an unknown generator at k=" + std::to_string(k));
                    s.module.U.emplace_back(f->second, t->second);
                }
                in.reduced[k] = std::move(s);
            }
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed knot input: ") + e.what());
    }
    return in;
}

KnotFloerInput load_knot_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open knot input '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_knot_input(ss.str());
}

std::string to_json(const KnotFloerInput& in) {
    nlohmann::ordered_json j;
    j["genus"] = in.genus;
    j["V"] = in.V;
    auto red = nlohmann::ordered_json::array();
    for (const auto& [k, s] : in.reduced) {
        nlohmann::ordered_json r;
        r["k"] = k;
        auto gens = nlohmann::ordered_json::array();
        for (size_t i = 0; i < s.module.rank(); ++i)
            gens.push_back({{"name", s.module.names[i]},
                            {"twice_level", s.module.twice_level[i]},
                            {"v", static_cast<bool>(s.v[i])},
                            {"h", static_cast<bool>(s.h[i])}});
        r["generators"] = gens;
        auto U = nlohmann::ordered_json::array();
        for (auto [f, t] : s.module.U) U.push_back({s.module.names[f], s.module.names[t]});
        r["U"] = U;
        red.push_back(r);
    }
    j["reduced"] = red;
    return j.dump(2);
}

}  // namespace sfhs
