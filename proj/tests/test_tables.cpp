#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sfhs/enumerate.hpp"
#include "sfhs/graded_root.hpp"
#include "sfhs/tables.hpp"

using namespace sfhs;

namespace {

std::vector<int64_t> as_i64(const std::vector<i128>& v) {
    std::vector<int64_t> out;
    for (i128 x : v) out.push_back(to_i64(x));
    return out;
}

// Diophantine data of a sample, checked against the defining equation independently
oracle::Dioph checked_dioph(const FamilySample& s) {
    auto p = as_i64(s.sp.p);
    oracle::Dioph d{to_i64(s.sol.e0), as_i64(s.sol.pprime)};
    i128 P = 1;
    for (int64_t x : p) P *= x;
    i128 rhs = -1;
    for (size_t i = 0; i < p.size(); ++i) {
        REQUIRE(d.pp[i] > 0);
        REQUIRE(d.pp[i] < p[i]);
        rhs -= static_cast<i128>(d.pp[i]) * (P / p[i]);
    }
    REQUIRE(static_cast<i128>(d.e0) * P == rhs);
    return d;
}

template <class Fn>
void for_each_member(const ProbeTable& t, int64_t p_max, int64_t q_max, Fn fn) {
    int64_t plo = t.p_fixed ? t.p_fixed : 5;
    int64_t phi = t.p_fixed ? t.p_fixed : p_max;
    for (int64_t p = plo; p <= phi; ++p) {
        if (t.family == Family::S2_3_11_13) {
            if (auto s = family_sample(t.family, p, 0)) fn(*s);
            continue;
        }
        for (int64_t q = p + 1; q <= q_max; ++q)
            if (auto s = family_sample(t.family, p, q)) fn(*s);
    }
}

}  // namespace

TEST_CASE("catalogue") {
    const auto& c = catalogue();
    REQUIRE(c.size() == 12);
    for (size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i].number == static_cast<int>(i) + 1);
        CHECK(!c[i].cells.empty());
        CHECK(&find_table(std::to_string(i + 1)) == &c[i]);
        CHECK(&find_table(c[i].name) == &c[i]);
    }
    CHECK_THROWS_AS(find_table("13"), InvalidInput);
    CHECK_THROWS_AS(find_table("nope"), InvalidInput);
}

TEST_CASE("rationals and linear forms") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-1, 3) < Rat(0));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    Bin b{Rat(1, 3), Rat(1, 2)};
    CHECK(b.contains(Rat(1, 2)));
    CHECK_FALSE(b.contains(Rat(1, 3)));

    Lin l;
    l.pq = 22;
    l.c = -3;
    CHECK(l.str() == "22pq - 3");
    CHECK(l.eval(7, 11, 1, 1) == 22 * 77 - 3);
    Lin m;
    m.q = 1420;
    m.qp = -1890;
    m.c = -7;
    CHECK(m.str() == "1420q - 1890q' - 7");
    CHECK(Lin{}.str() == "0");
}

TEST_CASE("key-value tables against the oracle Delta on a box") {
    for (int num : {1, 9}) {
        const ProbeTable& t = catalogue()[num - 1];
        int64_t applied = 0;
        for_each_member(t, 80, 500, [&](const FamilySample& s) {
            oracle::Dioph d = checked_dioph(s);
            auto p = as_i64(s.sp.p);
            for (const auto& cell : t.cells) {
                if (cell.kind != CellKind::KeyValues || !cell_applies(cell, s)) continue;
                ++applied;
                for (const auto& k : cell.keys) {
                    i128 n = k.at.eval(s.p, s.q, s.pp, s.qp);
                    REQUIRE(n > 0);
                    int64_t want = k.c0 + k.sign * (-d.e0);
                    REQUIRE(oracle::delta(p, d, to_i64(n)) == want);
                }
                REQUIRE(verify_sample(cell, s).ok);
            }
        });
        CHECK(applied > 100);
    }
}

TEST_CASE("Delta(781p) = 1 on Sigma(2,3,11,13,p)") {
    int64_t n = 0;
    for (int64_t p = 5; p <= 20000; ++p) {
        auto s = family_sample(Family::S2_3_11_13, p, 0);
        if (!s) continue;
        oracle::Dioph d = checked_dioph(*s);
        REQUIRE(oracle::delta(as_i64(s->sp.p), d, 781 * p) == 1);
        ++n;
    }
    CHECK(n > 5000);
}

TEST_CASE("certified-unsatisfiable cells have no members") {
    int64_t cells = 0;
    for (const auto& t : catalogue())
        for (const auto& cell : t.cells) {
            if (cell.kind != CellKind::Unsatisfiable && !certify_unsatisfiable(t, cell)) continue;
            ++cells;
            CAPTURE(t.number);
            CAPTURE(cell.id);
            for_each_member(t, 120, 700, [&](const FamilySample& s) { REQUIRE_FALSE(cell_applies(cell, s)); });
        }
    CHECK(cells > 0);
}

TEST_CASE("verify_table is deterministic in the seed") {
    const ProbeTable& t = find_table("2");
    std::string a = to_json(verify_table(t, 5, 42));
    std::string b = to_json(verify_table(t, 5, 42));
    CHECK(a == b);
    TableReport r = verify_table(t, 5, 42);
    CHECK(r.seed == 42);
    for (const auto& c : r.cells)
        if (c.status == "PASS" || c.status == "FAIL") {
            CHECK(c.samples.size() <= 5);
            std::set<std::pair<int64_t, int64_t>> uniq(c.samples.begin(), c.samples.end());
            CHECK(uniq.size() == c.samples.size());
        }
}

TEST_CASE("window witnesses imply U != 0 on HF_red") {
    int64_t witnessed = 0;
    for (const auto& p : tuples_by_product(5, 400000)) {
        auto sp = SeifertParams::make(p);
        auto w = window_witness(sp);
        if (!w) continue;
        ++witnessed;
        CAPTURE(*w);
        REQUIRE(u_power_nonzero_stream(sp, 1));
    }
    CHECK(witnessed > 50);
    CHECK_FALSE(window_witness(SeifertParams::make(std::vector<int64_t>{2, 3, 7})));
}
