#include <doctest.h>

#include <random>

#include "knot_gen.hpp"
#include "sfhs/graded_root.hpp"
#include "sfhs/mapping_cone.hpp"

using namespace sfhs;

namespace {

using gen::lspace;

KnotFloerInput fig8() {
    KnotFloerInput in = lspace({0, 0});
    ReducedSummand s;
    s.module.names = {"x"};
    s.module.twice_level = {0};
    s.v = {false};
    s.h = {false};
    in.reduced[0] = s;
    return in;
}

HRedSummary root_of(std::vector<int64_t> p) {
    return h_red(root_from_tau(tau_from_delta(delta_sequence(SeifertParams::make(p)))));
}

bool has_error(const KnotFloerInput& in, const std::string& needle) {
    for (const auto& e : validation_errors(in))
        if (e.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("input validation") {
    CHECK(validation_errors(lspace({1, 0})).empty());
    CHECK(validation_errors(fig8()).empty());
    CHECK(has_error(lspace({0, 1}), "V nonincreasing"));
    CHECK(has_error(lspace({0, 1}), "k=0"));
    CHECK(has_error(lspace({3, 1, 0}), "V_{k+1} >= V_k - 1"));
    CHECK(has_error(lspace({1, 1}), "V_g must be 0"));
    CHECK(has_error(lspace({-1, 0}), "negative"));
    CHECK_THROWS_AS(validate_input(lspace({0, 1})), InvalidInput);

    // reduced part of v_0 must vanish above V_0
    KnotFloerInput a = lspace({1, 0});
    ReducedSummand s;
    s.module.names = {"x"};
    s.module.twice_level = {4};
    s.v = {true};
    s.h = {false};
    a.reduced[0] = s;
    CHECK(has_error(a, "must vanish"));
    // genus one, V₀ = 1: level 1 is excluded too
    a.reduced[0].module.twice_level = {2};
    CHECK(has_error(a, "level-1"));

    KnotFloerInput b = lspace({1, 1, 0});
    ReducedSummand u;
    u.module.names = {"y", "x"};
    u.module.twice_level = {4, 0};
    u.module.U = {{0, 1}};
    u.v = {false, false};
    u.h = {false, false};
    b.reduced[0] = u;
    CHECK(has_error(b, "homogeneous"));

    KnotFloerInput c = lspace({1, 0});
    ReducedSummand w;
    w.module.names = {"y", "x"};
    w.module.twice_level = {2, 0};
    w.module.U = {{0, 1}};
    w.v = {false, false};
    w.h = {false, false};
    c.reduced[0] = w;
    CHECK(has_error(c, "U^g"));

    KnotFloerInput d = lspace({1, 0});
    d.reduced[1] = ReducedSummand{};
    CHECK(has_error(d, "|k| <= g-1"));
}

TEST_CASE("cone shapes") {
    for (int64_t n = 1; n <= 6; ++n) {
        TruncatedCone c = build_truncated_cone(fig8(), 1, n);
        CHECK(c.a.size() == static_cast<size_t>(n));
        CHECK(c.b.size() == static_cast<size_t>(n - 1));
    }
    KnotFloerInput g2 = lspace({1, 1, 0});
    size_t cols = 0;
    for (int64_t i = 0; i < 2; ++i) cols += build_truncated_cone(g2, 2, 3, i).a.size();
    CHECK(cols == 9);
    CHECK_THROWS_AS(build_truncated_cone(g2, 0, 1), InvalidInput);
    CHECK_THROWS_AS(build_truncated_cone(g2, -1, 2), InvalidInput);
    CHECK_THROWS_AS(build_truncated_cone(g2, 2, 4), InvalidInput);
    CHECK_THROWS_AS(build_truncated_cone(g2, 2, 3, 2), InvalidInput);
    CHECK_THROWS_AS(build_truncated_cone(lspace({0, 1}), 1, 1), InvalidInput);
}

TEST_CASE("torus-knot surgeries agree with graded roots") {
    // +1/n on T(r,s) is −Σ(r, s, rsn − 1); HF_red rank and U-order do not see orientation
    struct Case {
        std::vector<int64_t> V;
        int64_t r, s;
    };
    for (const Case& k : {Case{{1, 0}, 2, 3}, Case{{1, 1, 0}, 2, 5}, Case{{1, 1, 1, 0}, 3, 4},
                          Case{{2, 1, 1, 0}, 2, 7}}) {
        for (int64_t n = 1; n <= 4; ++n) {
            CAPTURE(k.r);
            CAPTURE(k.s);
            CAPTURE(n);
            SurgeryHomology h = surgery_homology(build_truncated_cone(lspace(k.V), 1, n));
            HRedSummary r = root_of({k.r, k.s, k.r * k.s * n - 1});
            CHECK(h.red_rank() == r.total_rank);
            CHECK(h.u_order == r.u_order);
        }
    }
    // trefoil: Σ(2,3,6n−1) has rank n − 1
    for (int64_t n = 1; n <= 8; ++n)
        CHECK(surgery_homology(build_truncated_cone(lspace({1, 0}), 1, n)).red_rank() == n - 1);
}

TEST_CASE("figure-eight and random genus-one inputs against the closed form") {
    for (int64_t n = 1; n <= 6; ++n) {
        SurgeryHomology h = surgery_homology(build_truncated_cone(fig8(), 1, n));
        CHECK(h.red_rank() == n);
        CHECK(h.u_order <= 1);
    }
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        KnotFloerInput in = gen::random_genus1(rng);
        REQUIRE(validation_errors(in).empty());
        int64_t r = in.summand(0) ? static_cast<int64_t>(in.summand(0)->module.rank()) : 0;
        for (int64_t n = 1; n <= 4; ++n) {
            SurgeryHomology h = surgery_homology(build_truncated_cone(in, 1, n));
            REQUIRE(h.red_rank() == n * r + (n - 1) * in.V[0]);
            REQUIRE(h.u_order <= 1);
        }
        for (const Genus1Row& row : genus1_check(in, 3)) REQUIRE(row.ok);
        GradedModuleSpec pm = pm_one_surgery_red(in);
        CHECK(static_cast<int64_t>(pm.rank()) == r);
        CHECK(pm.u_order() <= 1);
    }
}

TEST_CASE("differential is homogeneous and the ceiling is stable") {
    std::vector<TruncatedCone> cones = {build_truncated_cone(lspace({1, 1, 0}), 2, 3, 0),
                                        build_truncated_cone(lspace({1, 1, 0}), 2, 3, 1),
                                        build_truncated_cone(lspace({2, 1, 1, 0}), 1, 3),
                                        build_truncated_cone(fig8(), 3, 2, 1)};
    for (const auto& c : cones) {
        SurgeryHomology h = surgery_homology(c);
        auto d = differential_gradings(c, h.ceiling);
        CHECK(d.empty() == c.b.empty());
        for (auto [s, t] : d) REQUIRE(s == t);
        CHECK(same_homology(h, surgery_homology_at(c, h.ceiling + 2)));
        CHECK(h.tower_bottom == 0);
        // U^(g + ⌈g/2⌉) kills the reduced part
        int64_t g = c.input.genus;
        CHECK(h.u_order <= g + (g + 1) / 2);
    }
}

TEST_CASE("genus-two input with a nontrivial U") {
    KnotFloerInput in = lspace({1, 1, 0});
    ReducedSummand s;
    s.module.names = {"y", "x"};
    s.module.twice_level = {2, 0};
    s.module.U = {{0, 1}};
    s.v = {false, false};
    s.h = {false, false};
    in.reduced[0] = s;
    REQUIRE(validation_errors(in).empty());
    SurgeryHomology base = surgery_homology(build_truncated_cone(lspace({1, 1, 0}), 1, 1));
    SurgeryHomology h = surgery_homology(build_truncated_cone(in, 1, 1));
    CHECK(h.red_rank() == base.red_rank() + 2);
    CHECK(h.u_order >= 2);
    CHECK(h.u_order <= 3);
}

TEST_CASE("JSON round trip") {
    KnotFloerInput in = fig8();
    std::string j = to_json(in);
    KnotFloerInput back = parse_knot_input(j);
    CHECK(to_json(back) == j);
    CHECK(back.genus == 1);
    CHECK(back.summand(0)->module.names == std::vector<std::string>{"x"});
    CHECK_THROWS_AS(parse_knot_input("{"), InvalidInput);
    CHECK_THROWS_AS(parse_knot_input(R"({"genus": "one"})"), InvalidInput);

    std::string out = to_json(surgery_homology(build_truncated_cone(in, 1, 2)));
    CHECK(out.find("\"red_rank\":2") != std::string::npos);
}
