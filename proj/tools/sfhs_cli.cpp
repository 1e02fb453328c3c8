// sfhs: graded roots, surgery obstructions, table checks and mapping-cone surgeries for
// Seifert fibered homology spheres. JSON on stdout; exit 0 ok, 1 a verification reported
// failure, 2 invalid input, 3 resource cap, 4 tower ceiling did not stabilize.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfhs/graded_root.hpp"
#include "sfhs/mapping_cone.hpp"
#include "sfhs/obstruction.hpp"
#include "sfhs/tables.hpp"

using namespace sfhs;
using ojson = nlohmann::ordered_json;

namespace {

ojson jnum(i128 v) {
    if (fits_i64(v)) return static_cast<int64_t>(v);
    return to_string(v);
}

SeifertParams parse_fibers(const std::vector<std::string>& args) {
    std::vector<i128> p;
    for (const auto& a : args) p.push_back(parse_i128(a));
    return SeifertParams::make(p);
}

ojson fibers_json(const SeifertParams& sp) {
    auto a = ojson::array();
    for (i128 x : sp.p) a.push_back(jnum(x));
    return a;
}

int cmd_solve(const std::vector<std::string>& fib) {
    SeifertParams sp = parse_fibers(fib);
    DiophantineSolution sol = solve_diophantine(sp);
    ojson j;
    j["e0"] = jnum(sol.e0);
    auto pp = ojson::array();
    for (i128 x : sol.pprime) pp.push_back(jnum(x));
    j["pprime"] = pp;
    j["N0"] = jnum(n0(sp));
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_root(const std::vector<std::string>& fib, const std::string& dot, int64_t cap) {
    SeifertParams sp = parse_fibers(fib);
    DeltaSequence ds;
    try {
        ds = delta_sequence(sp, cap);
    } catch (const CapExceeded& e) {
        throw CapExceeded(std::string(e.what()) +
                          "; use `sfhs obstruct`, which falls back to Delta probes for large targets");
    }
    TauSequence tau = tau_from_delta(ds);
    GradedRoot root = root_from_tau(tau);
    HRedSummary h = h_red(root);
    ojson j;
    j["p"] = fibers_json(sp);
    j["N0"] = jnum(ds.n0);
    j["delta_entries"] = ds.entries.size();
    ojson rk = ojson::object();
    for (auto [g, r] : h.rank_by_grading) rk[std::to_string(g)] = r;
    j["hf_red_rank_by_grading"] = rk;
    j["hf_red_rank"] = h.total_rank;
    j["u_order"] = h.u_order;
    std::cout << j.dump() << "\n";
    if (!dot.empty()) {
        std::ofstream f(dot);
        if (!f) throw InvalidInput("cannot write '" + dot + "'");
        f << root.to_dot();
    }
    return 0;
}

int cmd_obstruct(const std::vector<std::string>& fib, int64_t genus, std::optional<int64_t> g4) {
    ObstructionQuery q;
    q.genus = genus;
    q.g4 = g4;
    q.target = parse_fibers(fib);
    ObstructionResult r = obstruct(q);
    ojson j;
    j["verdict"] = r.verdict == Verdict::Obstructed ? "OBSTRUCTED" : "INCONCLUSIVE";
    j["genus"] = genus;
    j["g4"] = g4.value_or(genus);
    j["target"] = fibers_json(q.target);
    j["bound"] = r.bound;
    j["u_order"] = r.u_order;
    j["u_order_exact"] = r.u_order_exact;
    j["method"] = r.method;
    j["witness"] = r.witness;
    j["assumptions"] = r.assumptions;
    if (q.target.l() == 5) j["five_fiber_case"] = five_fiber_case(q.target);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_verify_tables(const std::string& which, int samples, uint64_t seed) {
    if (samples < 1) throw InvalidInput("--samples must be positive");
    std::vector<const ProbeTable*> ts;
    if (which == "all")
        for (const auto& t : catalogue()) ts.push_back(&t);
    else
        ts.push_back(&find_table(which));
    bool ok = true;
    for (const ProbeTable* t : ts) {
        TableReport r = verify_table(*t, samples, seed);
        ok = ok && r.pass;
        std::cout << to_json(r) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_scan(int fibers, int64_t max_product, int threads, std::string output) {
    ScanOptions opt;
    opt.fibers = fibers;
    opt.max_product = max_product;
    opt.threads = threads;
    if (output.empty()) {
        if (const char* dir = std::getenv("SFHS_CACHE_DIR"); dir && *dir) {
            std::filesystem::create_directories(dir);
            output = (std::filesystem::path(dir) /
                      ("scan-l" + std::to_string(fibers) + "-m" + std::to_string(max_product) + ".jsonl"))
                         .string();
        }
    }
    std::vector<ScanRecord> recs = scan_families(opt);
    int64_t ge2 = 0, lemma_bad = 0, probe_bad = 0;
    for (const auto& r : recs) {
        ge2 += r.u_order >= 2;
        lemma_bad += !r.lemma_ok;
        probe_bad += !r.probe_ok;
    }
    ojson s;
    s["fibers"] = fibers;
    s["max_product"] = max_product;
    s["tuples"] = recs.size();
    s["u_order_ge_2"] = ge2;
    s["lemma_failures"] = lemma_bad;
    s["probe_failures"] = probe_bad;
    if (output.empty()) {
        for (const auto& r : recs) std::cout << to_json_line(r) << "\n";
        std::cerr << s.dump() << "\n";
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw InvalidInput("cannot write '" + output + "'");
        for (const auto& r : recs) f << to_json_line(r) << "\n";
        s["output"] = output;
        std::cout << s.dump() << "\n";
    }
    return 0;
}

int cmd_surgery(const std::string& input, const std::string& slope, const std::string& mirror) {
    auto slash = slope.find('/');
    if (slash == std::string::npos) throw InvalidInput("slope must be written 1/n or -1/n");
    int64_t num = 0, den = 0;
    try {
        num = std::stoll(slope.substr(0, slash));
        den = std::stoll(slope.substr(slash + 1));
    } catch (const std::exception&) {
        throw InvalidInput("cannot parse slope '" + slope + "'");
    }
    if (den <= 0 || (num != 1 && num != -1)) throw InvalidInput("only slopes 1/n and -1/n (n >= 1) are supported");
    ojson j;
    j["slope"] = slope;
    KnotFloerInput in;
    if (num > 0) {
        in = load_knot_input(input);
    } else {
        // S³_{−1/n}(K) = −S³_{1/n}(mirror K)
        if (mirror.empty()) throw InvalidInput("negative slopes need --mirror with data for the mirror knot");
        in = load_knot_input(mirror);
        j["via"] = "mirror: orientation-reversed 1/n surgery; rank and U-order only";
    }
    SurgeryHomology h = surgery_homology(build_truncated_cone(in, 1, den, 0));
    j["red_rank"] = h.red_rank();
    j["u_order"] = h.u_order;
    if (num > 0) {
        j["tower_bottom"] = h.tower_bottom;
        ojson rk = ojson::object();
        for (auto [g, r] : h.rank_by_grading) rk[std::to_string(g)] = r;
        j["rank_by_twice_level"] = rk;
    }
    j["ceiling"] = h.ceiling;
    std::cout << j.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heegaard Floer computations for Seifert fibered homology spheres"};
    app.require_subcommand(1);

    std::vector<std::string> fibers;
    auto* solve = app.add_subcommand("solve", "Diophantine data (e0, p', N0) of a tuple");
    solve->add_option("fibers", fibers, "p_1 < ... < p_l")->required();

    std::string dot;
    int64_t cap = kDefaultEnumerationCap;
    auto* root = app.add_subcommand("root", "graded root and HF_red summary");
    root->add_option("fibers", fibers, "p_1 < ... < p_l")->required();
    root->add_option("--dot", dot, "write the truncated root as DOT");
    root->add_option("--cap", cap, "enumeration cap on N0");

    int64_t genus = 0;
    std::optional<int64_t> g4;
    auto* obs = app.add_subcommand("obstruct", "can the target be 1/n surgery on a knot of this genus?");
    obs->add_option("--genus", genus, "knot genus")->required();
    obs->add_option("--g4", g4, "four-ball genus (defaults to the genus)");
    obs->add_option("fibers", fibers, "p_1 < ... < p_l")->required();

    std::string table = "all";
    int samples = 20;
    uint64_t seed = 42;
    auto* vt = app.add_subcommand("verify-tables", "check the Delta-probe tables on sampled (p, q)");
    vt->add_option("--table", table, "table number 1-12, name, or all");
    vt->add_option("--samples", samples, "samples per cell");
    vt->add_option("--seed", seed, "sampling seed");

    int nfib = 5, threads = 1;
    int64_t max_product = 0;
    std::string output;
    auto* scan = app.add_subcommand("scan", "exhaustive scan of all tuples up to a product bound");
    scan->add_option("--fibers", nfib, "number of fibers l")->required();
    scan->add_option("--max-product", max_product, "bound on p_1...p_l")->required();
    scan->add_option("--threads", threads, "worker threads");
    scan->add_option("--output", output, "JSON-lines output (default: $SFHS_CACHE_DIR or stdout)");

    std::string input, slope, mirror;
    auto* surg = app.add_subcommand("surgery", "HF_red of 1/n surgery from knot Floer input");
    surg->add_option("--input", input, "knot input JSON")->required();
    surg->add_option("--slope", slope, "1/n or -1/n")->required();
    surg->add_option("--mirror", mirror, "knot input JSON for the mirror (negative slopes)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*solve) return cmd_solve(fibers);
        if (*root) return cmd_root(fibers, dot, cap);
        if (*obs) return cmd_obstruct(fibers, genus, g4);
        if (*vt) return cmd_verify_tables(table, samples, seed);
        if (*scan) return cmd_scan(nfib, max_product, threads, output);
        if (*surg) return cmd_surgery(input, slope, mirror);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const StabilizationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
