// Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact (tolerance 0).
// Exits 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knot_gen.hpp"
#include "oracles.hpp"
#include "sfhs/enumerate.hpp"
#include "sfhs/graded_root.hpp"
#include "sfhs/mapping_cone.hpp"
#include "sfhs/obstruction.hpp"
#include "sfhs/tables.hpp"

using namespace sfhs;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("criterion %d: %s  %s  [tolerance: exact; %.1f s]  %s\n", id, o.pass ? "PASS" : "FAIL",
                title.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const std::vector<int64_t>& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

// the defining equation, evaluated independently of the solver
bool equation_holds(const std::vector<int64_t>& p, const DiophantineSolution& sol) {
    i128 P = 1;
    for (int64_t x : p) P *= x;
    i128 rhs = -1;
    for (size_t i = 0; i < p.size(); ++i) {
        if (sol.pprime[i] <= 0 || sol.pprime[i] >= p[i]) return false;
        rhs -= sol.pprime[i] * (P / p[i]);
    }
    return sol.e0 * P == rhs;
}

Outcome c1() {
    int64_t tuples = 0, bad = 0, fam235 = 0, fam237 = 0, range_bad = 0;
    std::string first;
    for (int l = 3; l <= 5; ++l)
        for_each_tuple_by_product(l, 1'000'000, [&](const std::vector<int64_t>& p) {
            ++tuples;
            auto sp = SeifertParams::make(p);
            DiophantineSolution sol = solve_diophantine(sp);
            if (!equation_holds(p, sol)) {
                if (!bad++) first = fmt(p);
                return;
            }
            if (l == 5 && p[0] == 2 && p[1] == 3 && (p[2] == 5 || p[2] == 7)) {
                int64_t lo = p[2] == 5 ? -3 : -4;
                (p[2] == 5 ? fam235 : fam237)++;
                if (sol.e0 < lo || sol.e0 > -1) {
                    if (!range_bad++) first = fmt(p) + " e0=" + to_string(sol.e0);
                }
            }
        });
    std::ostringstream d;
    d << tuples << " tuples, equation failures " << bad << "; e0 range: " << fam235 << " (2,3,5,p,q) and "
      << fam237 << " (2,3,7,p,q) tuples, violations " << range_bad;
    if (!first.empty()) d << "; first " << first;
    return {bad == 0 && range_bad == 0 && tuples > 0, d.str()};
}

Outcome c2() {
    const int64_t kMax = 1'000'000;
    const int64_t kPointwiseSmall = 20000;  // full pointwise sweep below this N₀
    const int kPointwiseLarge = 100;        // plus this many seeded tuples up to kMax
    int64_t tuples = 0, cert_bad = 0, tower_bad = 0, spot_bad = 0, pointwise_tuples = 0, pointwise_bad = 0;
    int64_t pointwise_values = 0;
    std::vector<std::vector<int64_t>> large;
    std::mt19937_64 rng(20240601);
    std::string first;

    auto pointwise = [&](const SeifertParams& sp, const DiophantineSolution& sol, int64_t N) {
        std::vector<int64_t> v(static_cast<size_t>(N) + 1);
        DeltaStepper st(sp, sol);
        for (int64_t n = 0; n <= N; ++n, st.advance()) v[static_cast<size_t>(n)] = st.value();
        ++pointwise_tuples;
        pointwise_values += N + 1;
        for (int64_t n = 0; n <= N; ++n)
            if (v[static_cast<size_t>(n)] != -v[static_cast<size_t>(N - n)]) return false;
        return true;
    };

    for_each_tuple_by_n0(kMax, [&](const std::vector<int64_t>& p) {
        auto sp = SeifertParams::make(p);
        DiophantineSolution sol = solve_diophantine(sp);
        i128 N = n0(sp);
        ++tuples;
        auto note = [&](int64_t& c) {
            if (!c++ && first.empty()) first = fmt(p);
        };
        if (N >= 0 && !antisymmetry_certificate(sp, sol)) note(cert_bad);
        i128 P = sp.P;
        for (int64_t k = 0; k <= 5; ++k)
            if (delta_at(sp, sol, k * P) != k + 1) note(tower_bad);
        if (N < 0) return;
        for (int j = 0; j < 4; ++j) {
            i128 n = static_cast<i128>(rng() % static_cast<uint64_t>(N + 1));
            if (delta_at(sp, sol, n) != -delta_at(sp, sol, N - n)) note(spot_bad);
        }
        if (N <= kPointwiseSmall) {
            if (!pointwise(sp, sol, to_i64(N))) note(pointwise_bad);
        } else if (large.size() < static_cast<size_t>(kPointwiseLarge)) {
            large.push_back(p);
        } else if (std::uniform_int_distribution<int64_t>(0, tuples)(rng) < kPointwiseLarge) {
            large[rng() % large.size()] = p;  // reservoir sample
        }
    });
    for (const auto& p : large) {
        auto sp = SeifertParams::make(p);
        if (!pointwise(sp, solve_diophantine(sp), to_i64(n0(sp)))) {
            ++pointwise_bad;
            if (first.empty()) first = fmt(p);
        }
    }
    std::ostringstream d;
    d << tuples << " tuples with N0 <= 1e6: certificate failures " << cert_bad << ", Delta(kP)=k+1 (k<=5) failures "
      << tower_bad << ", random-point failures " << spot_bad << "; pointwise sweep of " << pointwise_tuples
      << " tuples (" << pointwise_values << " values): failures " << pointwise_bad;
    if (!first.empty()) d << "; first " << first;
    return {cert_bad + tower_bad + spot_bad + pointwise_bad == 0, d.str()};
}

Outcome c3() {
    std::ostringstream d;
    bool ok = true;
    auto check = [&](const std::string& name, const std::vector<int64_t>& tau, int64_t want_rank,
                     int64_t want_u) {
        HRedSummary h = h_red(root_from_tau(TauSequence{tau}));
        oracle::Root o = oracle::ray_merge(tau);
        bool good = h.total_rank == o.rank && h.u_order == o.u_order && h.rank_by_grading == o.red_by_grading &&
                    h.total_rank == want_rank && (want_u < 0 || h.u_order == want_u);
        ok = ok && good;
        d << name << ": rank " << h.total_rank << " u_order " << h.u_order << (good ? "" : " MISMATCH") << "; ";
        return h;
    };
    auto seq = [](std::vector<int64_t> p) {
        // dense τ from the oracle Δ, compared with the library's sparse construction too
        auto sp = SeifertParams::make(p);
        HRedSummary lib = h_red(root_from_tau(tau_from_delta(delta_sequence(sp))));
        return std::make_pair(oracle::dense_tau(p), lib);
    };
    auto [t235, l235] = seq({2, 3, 5});
    check("Sigma(2,3,5)", t235, 0, 0);
    ok = ok && l235.total_rank == 0;
    auto [t237, l237] = seq({2, 3, 7});
    check("Sigma(2,3,7)", t237, 1, 1);
    ok = ok && l237.total_rank == 1 && l237.u_order == 1;
    HRedSummary f = check("worked example tau", {0, -1, 0, -1, -2, -3, -4, -3}, 1, -1);
    bool at_m1 = f.rank_by_grading == std::map<int64_t, int64_t>{{-1, 1}};
    ok = ok && at_m1;
    d << "worked example rank at grading -1: " << (at_m1 ? "1" : "wrong");
    return {ok, d.str()};
}

Outcome c4() {
    int64_t tuples = 0, checks = 0, bad = 0;
    std::string first;
    for (int l = 4; l <= 6; ++l)
        for_each_tuple_by_product(l, 300000, [&](const std::vector<int64_t>& p) {
            ++tuples;
            auto sp = SeifertParams::make(p);
            int64_t kmax = kcond_max_k(sp);
            for (int64_t k = 0; k <= kmax; ++k) {
                ++checks;
                if (!u_power_nonzero_stream(sp, k)) {
                    if (!bad++) first = fmt(p) + " k=" + std::to_string(k);
                }
            }
        });
    std::ostringstream d;
    d << tuples << " tuples, " << checks << " (tuple, k) checks of U^k HF_red != 0, failures " << bad;
    if (!first.empty()) d << "; first " << first;
    return {bad == 0, d.str()};
}

std::vector<std::vector<int64_t>> five_fiber_targets() { return tuples_by_product(5, 300000); }

Outcome c5() {
    int64_t bad = 0, tuples = 0, min_u = 1 << 30;
    std::string first;
    for (const auto& p : five_fiber_targets()) {
        ++tuples;
        int64_t u = stream_summary(SeifertParams::make(p)).u_order;
        min_u = std::min(min_u, u);
        if (u < 2 && !bad++) first = fmt(p);
    }
    std::ostringstream d;
    d << tuples << " five-fiber tuples, min u_order " << min_u << ", failures " << bad;
    if (!first.empty()) d << "; first " << first;
    return {bad == 0 && tuples > 0, d.str()};
}

Outcome c6() {
    std::ostringstream d;
    bool ok = true;
    for (int num = 1; num <= 9; ++num) {
        TableReport r = verify_table(catalogue()[num - 1], 20, 42);
        int64_t pass = 0, fail = 0, unsat = 0, other = 0;
        for (const auto& c : r.cells) {
            if (c.status == "PASS") ++pass;
            else if (c.status == "FAIL") ++fail;
            else if (c.status == "UNSATISFIABLE") ++unsat;
            else ++other;
        }
        ok = ok && r.pass;
        d << "T" << num << (r.pass ? " ok" : " FAIL") << "(" << pass << "p/" << fail << "f/" << unsat << "u";
        if (other) d << "/" << other << "o";
        d << ") ";
    }
    // Δ(781p) = 1 and the neighbouring key values, on every admissible p up to 20000
    const ProbeTable& t12 = catalogue()[11];
    int64_t members = 0, bad = 0;
    for (int64_t p = 5; p <= 20000; ++p) {
        auto s = family_sample(Family::S2_3_11_13, p, 0);
        if (!s) continue;
        ++members;
        if (delta_at(s->sp, s->sol, 781 * p) != 1) ++bad;
        for (const auto& cell : t12.cells)
            if (cell.kind == CellKind::KeyValues && cell_applies(cell, *s) && !verify_sample(cell, *s).ok) ++bad;
    }
    ok = ok && bad == 0;
    d << "| Delta(781p)=1 identity on " << members << " p: failures " << bad;
    return {ok, d.str()};
}

Outcome c7(const std::string& data) {
    KnotFloerInput tre = load_knot_input(data + "/trefoil.json");
    KnotFloerInput fig = load_knot_input(data + "/fig8.json");
    SurgeryHomology a = surgery_homology(build_truncated_cone(tre, 1, 1));
    SurgeryHomology b = surgery_homology(build_truncated_cone(fig, 1, 1));
    HRedSummary r235 = h_red(root_from_tau(tau_from_delta(delta_sequence(SeifertParams::make(std::vector<int64_t>{2, 3, 5})))));
    HRedSummary r237 = h_red(root_from_tau(tau_from_delta(delta_sequence(SeifertParams::make(std::vector<int64_t>{2, 3, 7})))));
    bool ok = a.red_rank() == r235.total_rank && a.red_rank() == 0 && b.red_rank() == r237.total_rank &&
              b.u_order == r237.u_order && b.red_rank() == 1 && b.u_order == 1;
    std::ostringstream d;
    d << "trefoil +1: rank " << a.red_rank() << " vs Sigma(2,3,5) " << r235.total_rank << "; figure-eight +1: rank "
      << b.red_rank() << " u_order " << b.u_order << " vs Sigma(2,3,7) " << r237.total_rank << "/" << r237.u_order;
    return {ok, d.str()};
}

std::vector<TruncatedCone> stability_cones;  // every surgery of criteria 7 and 8

Outcome c8() {
    std::mt19937_64 rng(8);
    int64_t runs = 0, bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        KnotFloerInput in = gen::random_genus1(rng);
        validate_input(in);
        for (int64_t n = 1; n <= 5; ++n) {
            TruncatedCone c = build_truncated_cone(in, 1, n);
            SurgeryHomology h = surgery_homology(c);
            ++runs;
            if (h.u_order > 1) ++bad;
            stability_cones.push_back(std::move(c));
        }
    }
    ObstructOptions cheap;
    cheap.prefer_exact = false;
    int64_t targets = 0, not_obstructed = 0;
    std::string first;
    for (const auto& p : five_fiber_targets()) {
        ObstructionQuery q;
        q.genus = 1;
        q.target = SeifertParams::make(p);
        ++targets;
        if (obstruct(q, cheap).verdict != Verdict::Obstructed && !not_obstructed++) first = fmt(p);
    }
    std::ostringstream d;
    d << runs << " genus-1 surgeries (200 inputs x n<=5): u_order > 1 in " << bad << "; genus-1 obstruct on "
      << targets << " five-fiber targets: not OBSTRUCTED " << not_obstructed;
    if (!first.empty()) d << "; first " << first;
    return {bad == 0 && not_obstructed == 0, d.str()};
}

Outcome c9(const std::string& data) {
    for (const char* f : {"/trefoil.json", "/fig8.json"}) {
        KnotFloerInput in = load_knot_input(data + f);
        for (int64_t n = 1; n <= 5; ++n) stability_cones.push_back(build_truncated_cone(in, 1, n));
    }
    stability_cones.push_back(build_truncated_cone(gen::lspace({1, 1, 0}), 2, 3, 0));
    stability_cones.push_back(build_truncated_cone(gen::lspace({1, 1, 0}), 2, 3, 1));
    int64_t unstable = 0;
    for (const auto& c : stability_cones) {
        SurgeryHomology h = surgery_homology(c);
        if (!same_homology(h, surgery_homology_at(c, h.ceiling + 2))) ++unstable;
    }
    auto dump = [](int threads) {
        ScanOptions o;
        o.fibers = 5;
        o.max_product = 100000;
        o.threads = threads;
        std::string s;
        for (const auto& r : scan_families(o)) s += to_json_line(r) + "\n";
        return s;
    };
    std::string s1 = dump(1), s2 = dump(2), s4 = dump(4);
    bool same = s1 == s2 && s1 == s4 && !s1.empty();
    std::ostringstream d;
    d << stability_cones.size() << " surgeries: T vs T+2 disagreements " << unstable << "; scan l=5 product<=1e5 ("
      << std::count(s1.begin(), s1.end(), '\n') << " lines) with 1/2/4 threads " << (same ? "byte-identical" : "DIFFER");
    return {unstable == 0 && same, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::string data = "data";
    app.add_option("--data", data, "directory with trefoil.json and fig8.json");
    CLI11_PARSE(app, argc, argv);

    criterion(1, "Diophantine solutions and e0 ranges", c1);
    criterion(2, "Delta antisymmetry and tower law", c2);
    criterion(3, "graded-root baselines vs ray-merge oracle", c3);
    criterion(4, "fiber-count lower bound sweep", c4);
    criterion(5, "five fibers imply u_order >= 2", c5);
    criterion(6, "probe tables 1-9 and the Delta(781p) identity", c6);
    criterion(7, "mapping cone vs graded roots", [&] { return c7(data); });
    criterion(8, "genus-one surgeries and genus-one obstructions", c8);
    criterion(9, "tower-ceiling and thread-count stability", [&] { return c9(data); });

    // outside the criteria: the remaining tables, reported for information
    for (int num = 10; num <= 12; ++num) {
        TableReport r = verify_table(catalogue()[num - 1], 20, 42);
        int64_t fail = 0;
        for (const auto& c : r.cells) fail += c.status == "FAIL";
        std::printf("info: table %d %s (%lld failing cells of %zu)\n", num, r.pass ? "PASS" : "FAIL",
                    static_cast<long long>(fail), r.cells.size());
    }
    std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
