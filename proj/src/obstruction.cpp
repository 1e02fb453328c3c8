#include "sfhs/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "sfhs/enumerate.hpp"
#include "sfhs/graded_root.hpp"
#include "sfhs/tables.hpp"

namespace sfhs {

int64_t kcond_max_k(const SeifertParams& sp) {
    i128 N0 = n0(sp);
    if (N0 <= 0) return -1;
    // k < N₀/(2P)  ⇔  k <= (N₀ − 1) / (2P)
    return to_i64((N0 - 1) / mul_ck(2, sp.P));
}

int64_t genus_bound_min_fibers(int64_t g, bool genus_one_refinement) {
    if (g < 0) throw InvalidInput("genus must be nonnegative");
    if (genus_one_refinement && g == 1) return 5;
    // 90g <= 24l − 103
    i128 need = static_cast<i128>(90) * g + 103;
    return to_i64(std::max<i128>(3, ceil_div(need, 24)));
}

int five_fiber_case(const SeifertParams& sp) {
    if (sp.l() != 5) throw InvalidInput("five_fiber_case needs exactly 5 fibers");
    const auto& p = sp.p;
    if (p[0] >= 4) return 1;
    if (p[0] == 3 && p[4] >= 17) return 2;
    if (p[0] == 2 && p[1] == 3) {
        if (p[2] >= 17) return 3;
        if (p[2] == 7 && p[3] >= 83) return 4;
        if (p[2] == 7 && p[3] == 43 && p[4] >= 1811) return 5;
        if (p[2] == 11 && p[3] >= 15 && p[4] >= 101) return 6;
    }
    return 0;
}

std::string residual_family(const SeifertParams& sp) {
    if (sp.l() != 5) throw InvalidInput("residual_family needs exactly 5 fibers");
    const auto& p = sp.p;
    if (p[0] == 2 && p[1] == 3) {
        if (p[2] == 5) return "2,3,5,p,q";
        if (p[2] == 7) return "2,3,7,p,q";
        if (p[2] == 11 && p[3] == 13) return "2,3,11,13,p";
    }
    return "other";
}

int64_t probe_lower_bound(const SeifertParams& sp) {
    int64_t kmax = kcond_max_k(sp);
    if (kmax < 0) return 0;
    DiophantineSolution sol = solve_diophantine(sp);
    i128 N0 = n0(sp);
    for (int64_t k = kmax; k >= 0; --k) {
        i128 x = mul_ck(k, sp.P);
        if (mul_ck(2, x) >= N0) continue;
        if (delta_at(sp, sol, x) == k + 1 && delta_at(sp, sol, N0 - x) == -(k + 1)) return k + 1;
    }
    return 0;
}

ObstructionResult obstruct(const ObstructionQuery& q, const ObstructOptions& opt) {
    const int64_t g = q.genus;
    const int64_t g4 = q.g4.value_or(g);
    if (g < 0) throw InvalidInput("genus must be nonnegative");
    if (g4 < 0 || g4 > g) throw InvalidInput("four-ball genus must lie in [0, genus]");

    ObstructionResult r;
    r.bound = g + (g4 + 1) / 2;
    r.witness = "U^(g+ceil(g4/2)) kills HF_red of every 1/n surgery on a knot of genus g";
    if (g == 0) {
        r.bound = 0;
        r.witness = "1/n surgery on the unknot is S^3, which has HF_red = 0";
    } else if (g == 1) {
        r.bound = 1;
        r.witness = "U kills HF_red of every 1/n surgery on a genus-one knot";
    }
    r.assumptions = {
        "target bounds a negative definite plumbing",
        "U-orders are orientation-insensitive; no orientation convention is fixed",
    };

    const SeifertParams& sp = q.target;
    const i128 N0 = n0(sp);
    auto finish = [&]() {
        r.verdict = r.u_order > r.bound ? Verdict::Obstructed : Verdict::Inconclusive;
        return r;
    };

    if (N0 <= 0) {
        r.u_order = 0;
        r.u_order_exact = true;
        r.method = "graded root (N0 <= 0, HF_red = 0)";
        return finish();
    }
    const i128 half = (N0 + 1) / 2;
    if (opt.prefer_exact && half <= opt.exact_step_cap) {
        StreamSummary s = stream_summary(sp, opt.exact_step_cap);
        r.u_order = s.u_order;
        r.u_order_exact = true;
        r.method = "graded root (streamed tau over n <= N0/2)";
        return finish();
    }
    int64_t lb = probe_lower_bound(sp);
    if (lb > r.bound) {
        r.u_order = lb;
        r.method = "Delta probe at (kP, N0-kP)";
        return finish();
    }
    if (r.bound == 1) {
        if (auto w = window_witness(sp)) {
            r.u_order = 2;
            r.method = "Delta window " + *w;
            return finish();
        }
    }
    if (half <= opt.search_step_cap) {
        if (u_power_nonzero_stream(sp, r.bound, opt.search_step_cap)) {
            r.u_order = r.bound + 1;
            r.method = "early-exit tau scan";
        } else {
            // U^bound·HF_red = 0, so the order lies in [lb, bound]
            r.u_order = lb;
            r.method = "early-exit tau scan found no witness";
        }
        return finish();
    }
    throw CapExceeded("target too large for enumeration and no probe decides it (N0 = " + to_string(N0) + ")");
}

std::vector<ScanRecord> scan_families(const ScanOptions& opt) {
    if (opt.fibers < 3) throw InvalidInput("need at least 3 fibers");
    if (opt.max_product < 1) throw InvalidInput("max product must be positive");
    std::vector<std::vector<int64_t>> tuples;
    for_each_tuple_by_product(opt.fibers, opt.max_product, [&](const std::vector<int64_t>& t) {
        if (static_cast<int64_t>(tuples.size()) >= opt.max_tuples)
            throw CapExceeded("scan exceeds " + std::to_string(opt.max_tuples) + " tuples");
        tuples.push_back(t);
    });

    std::vector<ScanRecord> out(tuples.size());
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&]() {
        try {
            for (size_t i; (i = next.fetch_add(1)) < tuples.size();) {
                SeifertParams sp = SeifertParams::make(tuples[i]);
                DiophantineSolution sol = solve_diophantine(sp);
                ScanRecord& r = out[i];
                r.p = tuples[i];
                r.e0 = sol.e0;
                r.pprime = sol.pprime;
                r.n0 = n0(sp);
                StreamSummary s = stream_summary(sp, opt.step_cap);
                r.u_order = s.u_order;
                r.hf_red_rank = s.total_rank;
                r.kcond_max_k = kcond_max_k(sp);
                r.probe_lower_bound = probe_lower_bound(sp);
                r.lemma_ok = r.u_order > r.kcond_max_k;
                r.probe_ok = r.probe_lower_bound <= r.u_order;
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!err) err = std::current_exception();
            next = tuples.size();
        }
    };
    int nt = std::max(1, opt.threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

namespace {

nlohmann::ordered_json jnum(i128 v) {
    if (fits_i64(v)) return static_cast<int64_t>(v);
    return to_string(v);
}

}  // namespace

std::string to_json_line(const ScanRecord& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["e0"] = jnum(r.e0);
    auto pp = nlohmann::ordered_json::array();
    for (i128 x : r.pprime) pp.push_back(jnum(x));
    j["pprime"] = pp;
    j["N0"] = jnum(r.n0);
    j["u_order"] = r.u_order;
    j["hf_red_rank"] = r.hf_red_rank;
    j["kcond_max_k"] = r.kcond_max_k;
    j["probe_lower_bound"] = r.probe_lower_bound;
    j["lemma_ok"] = r.lemma_ok;
    j["probe_ok"] = r.probe_ok;
    return j.dump();
}

}  // namespace sfhs
