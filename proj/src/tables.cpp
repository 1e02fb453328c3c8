#include "sfhs/tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "sfhs/prng.hpp"

namespace sfhs {

// ---------------------------------------------------------------- rationals

Rat::Rat(i128 n, i128 d) {
    if (d == 0) throw std::logic_error("zero denominator");
    if (d < 0) n = -n, d = -d;
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
    num = n;
    den = d;
}

bool operator<(const Rat& a, const Rat& b) { return mul_ck(a.num, b.den) < mul_ck(b.num, a.den); }
bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
Rat operator+(const Rat& a, const Rat& b) {
    return Rat(add_ck(mul_ck(a.num, b.den), mul_ck(b.num, a.den)), mul_ck(a.den, b.den));
}
Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }

// ---------------------------------------------------------------- linear forms

i128 Lin::eval(i128 P, i128 Q, i128 Pp, i128 Qp) const {
    i128 r = c;
    r = add_ck(r, mul_ck(pq, mul_ck(P, Q)));
    r = add_ck(r, mul_ck(pqp, mul_ck(P, Qp)));
    r = add_ck(r, mul_ck(ppq, mul_ck(Pp, Q)));
    r = add_ck(r, mul_ck(q, Q));
    r = add_ck(r, mul_ck(qp, Qp));
    r = add_ck(r, mul_ck(p, P));
    r = add_ck(r, mul_ck(pp, Pp));
    return r;
}

std::string Lin::str() const {
    std::string s;
    auto term = [&](i128 k, const char* name) {
        if (k == 0) return;
        if (!s.empty()) s += k < 0 ? " - " : " + ";
        else if (k < 0) s += "-";
        i128 a = k < 0 ? -k : k;
        if (a != 1 || *name == 0) s += to_string(a);
        s += name;
    };
    term(pq, "pq");
    term(pqp, "pq'");
    term(ppq, "p'q");
    term(q, "q");
    term(qp, "q'");
    term(p, "p");
    term(pp, "p'");
    term(c, "");
    return s.empty() ? "0" : s;
}

bool Threshold::holds(int64_t p, int64_t q) const {
    if (p > p_above && q > q_above) return true;
    for (auto [ep, eq] : exceptions)
        if (p == ep && q > eq) return true;
    return false;
}

// ---------------------------------------------------------------- catalogue

namespace {

Lin xpq(int64_t x, int64_t k) {
    Lin l;
    l.pq = x;
    l.c = k;
    return l;
}

Bin bin(i128 a, i128 b, i128 c, i128 d) { return Bin{Rat(a, b), Rat(c, d)}; }

std::vector<Bin> fifths() {
    std::vector<Bin> v;
    for (int i = 0; i < 5; ++i) v.push_back(bin(i, 5, i + 1, 5));
    return v;
}

Threshold thr(int64_t p_above, std::vector<std::pair<int64_t, int64_t>> ex = {}, int64_t q_above = 0) {
    Threshold t;
    t.claimed = true;
    t.p_above = p_above;
    t.q_above = q_above;
    t.exceptions = std::move(ex);
    return t;
}

// 28pq + 6 < N₀/2 for Σ(2,3,5,p,q)
Threshold thr235() { return thr(20, {{11, 114}, {13, 43}, {17, 24}, {19, 21}}); }
// 39pq + 1 < N₀/2 for Σ(2,3,7,p,q)
Threshold thr237() { return thr(12, {{11, 25}}); }
// p = 7 tables: only q is free
Threshold thr_q(int64_t q_above) { return thr(0, {}, q_above); }

TableCell window(std::string id, Lin s, Lin e, Threshold t) {
    TableCell c;
    c.id = std::move(id);
    c.kind = CellKind::Window;
    c.start = s;
    c.end = e;
    c.threshold = std::move(t);
    return c;
}

TableCell delegated(std::string id, int to) {
    TableCell c;
    c.id = std::move(id);
    c.kind = CellKind::Delegated;
    c.delegate = to;
    return c;
}

TableCell unsat(std::string id) {
    TableCell c;
    c.id = std::move(id);
    c.kind = CellKind::Unsatisfiable;
    return c;
}

std::string bins_id(int r, int c) { return "q'/q bin " + std::to_string(r + 1) + ", p'/p bin " + std::to_string(c + 1); }

void place(TableCell& c, const std::vector<Bin>& rows, const std::vector<Bin>& cols, int r, int k) {
    c.qbin = rows[r];
    c.pbin = cols[k];
}

// ---- Table 1: key values for Σ(2,3,5,p,q)
ProbeTable table_235_keys() {
    ProbeTable t;
    t.number = 1;
    t.name = "235-key-values";
    t.caption = "Key values of Delta(xpq), Delta(xpq +- 1) for Sigma(2,3,5,p,q)";
    t.family = Family::S235;
    t.p_min = 7;
    t.p_max = 200;
    t.q_max = 3000;
    const int cols[8][2] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {2, 4}};
    // c0 of Δ(xpq − 1) = c0 − |e₀| and of Δ(xpq + 1) = |e₀| − c0, per column
    const int minus[3][8] = {{2, 2, 2, 2, 3, 3, 3, 3}, {2, 2, 2, 3, 2, 2, 2, 3}, {2, 2, 3, 3, 2, 2, 3, 3}};
    const int plus[3][8] = {{2, 2, 2, 2, 3, 3, 3, 3}, {2, 3, 3, 3, 2, 3, 3, 3}, {2, 2, 3, 3, 2, 2, 3, 3}};
    const int xs[3] = {25, 26, 27};
    for (int k = 0; k < 8; ++k) {
        TableCell c;
        c.id = "a=" + std::to_string(cols[k][0]) + ", b=" + std::to_string(cols[k][1]);
        c.kind = CellKind::KeyValues;
        c.a = cols[k][0];
        c.bs = {cols[k][1]};
        for (int r = 0; r < 3; ++r) {
            c.keys.push_back({xpq(xs[r], -1), minus[r][k], -1});
            c.keys.push_back({xpq(xs[r], 0), 1, 0});
            c.keys.push_back({xpq(xs[r], 1), -plus[r][k], 1});
        }
        t.cells.push_back(c);
    }
    return t;
}

// ---- Table 2: general cases for Σ(2,3,5,p,q)
ProbeTable table_235_general() {
    ProbeTable t;
    t.number = 2;
    t.name = "235-compmod30";
    t.caption = "General cases for Sigma(2,3,5,p,q), p and q sufficiently large";
    t.family = Family::S235;
    t.p_min = 7;
    t.p_max = 200;
    t.q_max = 3000;
    Threshold th = thr235();
    th.exceptions.push_back({7, 42});
    struct Row {
        int res;
        // per e₀ = −1, −2, −3: x, k_start, k_end or delegate table (x = 0)
        int cell[3][3];
    };
    const Row rows[] = {
        {1, {{26, -1, 0}, {26, -1, 0}, {0, 3, 0}}},
        {7, {{26, -1, 0}, {25, -1, 0}, {27, 0, 1}}},
        {11, {{25, -1, 0}, {26, -1, 0}, {25, 0, 1}}},
        {13, {{26, -1, 0}, {25, -1, 0}, {0, 4, 0}}},
        {17, {{25, -1, 0}, {0, 5, 0}, {25, 0, 1}}},
        {19, {{26, -1, 0}, {25, -1, 0}, {26, 0, 1}}},
        {23, {{25, -1, 0}, {27, -1, 0}, {25, 0, 1}}},
        {29, {{25, -1, 0}, {0, 6, 0}, {25, 0, 1}}},
    };
    for (const Row& r : rows) {
        for (int e = 0; e < 3; ++e) {
            std::string id = "pq=" + std::to_string(r.res) + " mod 30, e0=" + std::to_string(-(e + 1));
            TableCell c;
            if (r.cell[e][0] == 0) {
                c = delegated(id, r.cell[e][1]);
            } else {
                const int* w = r.cell[e];
                c = window(id, xpq(w[0], w[1]), xpq(w[0], w[2]), th);
                if (r.res == 19 && e == 2) c.note = "printed as 26pq+1, 26pq+1; read as 26pq, 26pq+1";
            }
            c.residues = {r.res};
            c.e0 = -(e + 1);
            t.cells.push_back(c);
        }
    }
    return t;
}

// ---- Table 3: pq ≡ 1 mod 30, e₀ = −3
ProbeTable table_235_1mod30() {
    ProbeTable t;
    t.number = 3;
    t.name = "235-1mod30";
    t.caption = "pq = 1 mod 30, e0 = -3, p and q sufficiently large";
    t.family = Family::S235;
    t.p_min = 11;
    t.p_max = 200;
    t.q_max = 3000;
    std::vector<Bin> b = {bin(0, 1, 1, 3), bin(1, 3, 1, 2), bin(1, 2, 2, 3), bin(2, 3, 1, 1)};
    Threshold A = thr235();
    Threshold B = thr(0, {}, 6);
    Lin bq;  // 15pq + 30pq′
    bq.pq = 15;
    bq.pqp = 30;
    Lin bq1 = bq;
    bq1.c = 1;
    Lin bp;  // 15pq + 30p′q
    bp.pq = 15;
    bp.ppq = 30;
    Lin bp1 = bp;
    bp1.c = 1;
    auto a20 = [&] { return window("", xpq(20, 0), xpq(20, 2), A); };
    auto a22 = [&](int s) { return window("", xpq(22, s), xpq(22, 0), A); };
    TableCell grid[4][4] = {
        {a20(), window("", bq, bq1, B), window("", bq, bq1, B), a22(-3)},
        {window("", bp, bp1, B), a20(), a22(-3), a22(-3)},
        {window("", bp, bp1, B), a22(-3), a22(-2), a22(-3)},
        {a22(-3), a22(-3), a22(-3), a22(-2)},
    };
    grid[0][3].note = "printed start 20pq-3 read as 22pq-3";
    grid[2][1].note = "printed end 20pq+2 read as 22pq";
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < 4; ++k) {
            TableCell c = grid[r][k];
            c.id = bins_id(r, k);
            c.residues = {1};
            c.e0 = -3;
            place(c, b, b, r, k);
            t.cells.push_back(c);
        }
    return t;
}

// ---- Table 4: pq ≡ 13 mod 30, e₀ = −3
ProbeTable table_235_13mod30() {
    ProbeTable t;
    t.number = 4;
    t.name = "235-13mod30";
    t.caption = "pq = 13 mod 30, e0 = -3, p and q sufficiently large";
    t.family = Family::S235;
    t.p_min = 11;
    t.p_max = 200;
    t.q_max = 3000;
    auto b = fifths();
    Threshold A = thr235();
    Threshold B = thr(60, {{31, 936}, {37, 159}, {41, 112}, {43, 99}, {47, 83}, {53, 69}, {59, 61},
                           {11, 29}, {13, 11}, {17, 55}, {19, 9}, {23, 40}, {29, 12}});
    auto w26 = [&] { return window("", xpq(26, 0), xpq(26, 2), A); };
    auto w28 = [&] { return window("", xpq(28, 0), xpq(28, 6), A); };
    auto w28m = [&] { return window("", xpq(28, -4), xpq(28, 0), A); };
    Lin s;  // 60pq′ − 9pq
    s.pqp = 60;
    s.pq = -9;
    Lin e = s;
    e.c = 3;
    TableCell grid[5][5] = {
        {w26(), w26(), w26(), w26(), w26()},
        {w26(), w26(), w26(), w26(), w26()},
        {w26(), w26(), w28(), w28(), w28m()},
        {w26(), w26(), w28(), window("", s, e, B), w28m()},
        {w26(), w26(), w28m(), w28m(), w28m()},
    };
    grid[3][3].note = "printed 90pq'-3pq; the worked case uses 60pq'-9pq";
    for (int r = 0; r < 5; ++r)
        for (int k = 0; k < 5; ++k) {
            TableCell c = grid[r][k];
            c.id = bins_id(r, k);
            c.residues = {13};
            c.e0 = -3;
            place(c, b, b, r, k);
            t.cells.push_back(c);
        }
    return t;
}

// ---- Table 5: pq ≡ 17 mod 30, e₀ = −2
ProbeTable table_235_17mod30() {
    ProbeTable t;
    t.number = 5;
    t.name = "235-17mod30";
    t.caption = "pq = 17 mod 30, e0 = -2, p and q sufficiently large";
    t.family = Family::S235;
    t.p_min = 11;
    t.p_max = 200;
    t.q_max = 3000;
    auto b = fifths();
    Threshold A = thr235();
    Threshold B = thr(60, {{31, 930}, {37, 158}, {41, 111}, {43, 99}, {47, 82}, {53, 69}, {59, 61},
                           {11, 1}, {13, 1}, {17, 6}, {19, 9}, {23, 40}, {29, 12}});
    auto w = [&](int x, int s, int e) { return window("", xpq(x, s), xpq(x, e), A); };
    Lin s;  // 51pq − 60pq′
    s.pq = 51;
    s.pqp = -60;
    Lin s3 = s;
    s3.c = -3;
    TableCell grid[5][5] = {
        {w(28, 0, 3), w(28, 0, 4), w(28, 0, 4), w(26, -2, 0), w(26, -2, 0)},
        {w(28, 0, 4), window("", s3, s, B), w(28, -6, 0), w(26, -2, 0), w(26, -2, 0)},
        {w(28, 0, 0), w(28, -6, 0), w(28, -6, 0), w(26, -2, 0), w(26, -2, 0)},
        {w(26, -2, 0), w(26, -2, 0), w(26, -2, 0), w(26, -2, 0), w(26, -2, 0)},
        {w(26, -2, 0), w(26, -2, 0), w(26, -2, 0), w(26, -2, 0), w(26, -2, 0)},
    };
    grid[2][0].note = "printed as 28pq ... 28pq (a single position)";
    for (int r = 0; r < 5; ++r)
        for (int k = 0; k < 5; ++k) {
            TableCell c = grid[r][k];
            c.id = bins_id(r, k);
            c.residues = {17};
            c.e0 = -2;
            place(c, b, b, r, k);
            t.cells.push_back(c);
        }
    t.cells[20].note = "row header printed as 5/5 < q'/q <= 1; read as 4/5";
    return t;
}

// ---- Table 6: pq ≡ 29 mod 30, e₀ = −2
ProbeTable table_235_29mod30() {
    ProbeTable t;
    t.number = 6;
    t.name = "235-29mod30";
    t.caption = "pq = 29 mod 30, e0 = -2, p and q sufficiently large";
    t.family = Family::S235;
    t.p_min = 11;
    t.p_max = 200;
    t.q_max = 3000;
    std::vector<Bin> b = {bin(0, 1, 1, 2), bin(1, 2, 3, 5), bin(3, 5, 1, 1)};
    Threshold A = thr235();
    Threshold C4 = thr(20, {{11, 111}, {13, 43}, {17, 25}, {19, 21}});
    Threshold C5 = thr(12, {{11, 13}});
    Lin c4p;  // 60p′q − 8pq
    c4p.ppq = 60;
    c4p.pq = -8;
    Lin c4p2 = c4p;
    c4p2.c = 2;
    Lin c4q;  // 60pq′ − 8pq
    c4q.pqp = 60;
    c4q.pq = -8;
    Lin c4q2 = c4q;
    c4q2.c = 2;
    Lin c5p;  // 45pq − 30p′q
    c5p.pq = 45;
    c5p.ppq = -30;
    Lin c5p1 = c5p;
    c5p1.c = -1;
    Lin c5q;  // 45pq − 30pq′
    c5q.pq = 45;
    c5q.pqp = -30;
    Lin c5q1 = c5q;
    c5q1.c = -1;
    auto w26 = [&] { return window("", xpq(26, 0), xpq(26, 2), A); };
    auto w26m = [&] { return window("", xpq(26, -2), xpq(26, 0), A); };
    TableCell grid[3][3] = {
        {w26(), window("", c4p, c4p2, C4), window("", c5p1, c5p, C5)},
        {window("", c4q, c4q2, C4), w26m(), w26m()},
        {window("", c5q1, c5q, C5), w26m(), w26m()},
    };
    grid[0][1].note = "printed end 60q'-8q+2 read as 60p'q-8pq+2";
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k) {
            TableCell c = grid[r][k];
            c.id = bins_id(r, k);
            c.residues = {29};
            c.e0 = -2;
            place(c, b, b, r, k);
            t.cells.push_back(c);
        }
    return t;
}

Lin qform(int64_t q, int64_t qp, int64_t c) {
    Lin l;
    l.q = q;
    l.qp = qp;
    l.c = c;
    return l;
}

// ---- Table 7: Σ(2,3,5,7,q), pq ≡ 13 mod 30, e₀ = −3
ProbeTable table_2357_13() {
    ProbeTable t;
    t.number = 7;
    t.name = "2357-13mod30";
    t.caption = "pq = 13 mod 30, p = 7, e0 = -3";
    t.family = Family::S235;
    t.p_fixed = 7;
    t.p_min = 7;
    t.p_max = 7;
    t.q_max = 100000;
    auto b = fifths();
    Threshold A = thr_q(11);
    auto w26 = [&] { return window("", xpq(26, 0), xpq(26, 2), A); };
    Lin s;  // 60pq′ − 9pq
    s.pqp = 60;
    s.pq = -9;
    Lin e = s;
    e.c = 3;
    TableCell grid[5][5] = {
        {w26(), w26(), w26(), w26(), w26()},
        {w26(), w26(), w26(), w26(), w26()},
        {w26(), w26(), unsat(""), window("", qform(280, -210, -7), qform(280, -210, 0), thr_q(0)), unsat("")},
        {w26(), w26(), window("", qform(1420, -1890, -7), qform(1420, -1890, 0), thr_q(4)), window("", s, e, thr_q(2)),
         unsat("")},
        {w26(), w26(), window("", qform(520, -420, -2), qform(520, -420, 0), thr_q(11)), unsat(""), unsat("")},
    };
    for (int r = 0; r < 5; ++r)
        for (int k = 0; k < 5; ++k) {
            TableCell c = grid[r][k];
            c.id = bins_id(r, k);
            c.residues = {13};
            c.e0 = -3;
            place(c, b, b, r, k);
            t.cells.push_back(c);
        }
    return t;
}

// ---- Table 8: Σ(2,3,5,7,q), pq ≡ 17 mod 30, e₀ = −2
ProbeTable table_2357_17() {
    ProbeTable t;
    t.number = 8;
    t.name = "2357-17mod30";
    t.caption = "pq = 17 mod 30, p = 7, e0 = -2";
    t.family = Family::S235;
    t.p_fixed = 7;
    t.p_min = 7;
    t.p_max = 7;
    t.q_max = 100000;
    auto b = fifths();
    Threshold A = thr_q(11);
    auto w26m = [&] { return window("", xpq(26, -2), xpq(26, 0), A); };
    Lin s;  // 51pq − 60pq′
    s.pq = 51;
    s.pqp = -60;
    Lin s3 = s;
    s3.c = -3;
    TableCell grid[5][5] = {
        {unsat(""), unsat(""), window("", qform(182, 0, -2), qform(182, 0, 0), thr_q(11)), w26m(), w26m()},
        {unsat(""), window("", s3, s, thr_q(1)), window("", qform(240, -210, -10), qform(240, -210, 0), thr_q(4)),
         w26m(), w26m()},
        {unsat(""), window("", qform(777, -1260, -7), qform(777, -1260, 0), thr_q(5)), unsat(""), w26m(), w26m()},
        {w26m(), w26m(), w26m(), w26m(), w26m()},
        {w26m(), w26m(), w26m(), w26m(), w26m()},
    };
    grid[1][2].note = "printed end 240q-210q'-10 (same as start) read as 240q-210q'";
    for (int r = 0; r < 5; ++r)
        for (int k = 0; k < 5; ++k) {
            TableCell c = grid[r][k];
            c.id = bins_id(r, k);
            c.residues = {17};
            c.e0 = -2;
            place(c, b, b, r, k);
            if (c.kind == CellKind::Window && c.start.pq == 26 && c.note.empty())
                c.note = "26pq threshold for p = 7 not stated; q > 11 assumed";
            t.cells.push_back(c);
        }
    return t;
}

// ---- Table 9: key values for Σ(2,3,7,p,q)
ProbeTable table_237_keys() {
    ProbeTable t;
    t.number = 9;
    t.name = "237-key-values";
    t.caption = "Key values of Delta(xpq), Delta(xpq +- 1) for Sigma(2,3,7,p,q)";
    t.family = Family::S237;
    t.p_min = 11;
    t.p_max = 200;
    t.q_max = 3000;
    struct Col {
        int a;
        std::vector<int> bs;
    };
    const Col cols[8] = {{1, {1, 2}}, {1, {3}}, {1, {4}}, {1, {5, 6}}, {2, {1, 2}}, {2, {3}}, {2, {4}}, {2, {5, 6}}};
    const int minus[4][8] = {
        {1, 1, 1, 2, 2, 2, 2, 3}, {2, 2, 2, 2, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}, {2, 2, 3, 3, 2, 2, 3, 3}};
    const int plus[4][8] = {
        {2, 3, 3, 3, 3, 4, 4, 4}, {2, 2, 2, 2, 3, 3, 3, 3}, {3, 3, 3, 3, 3, 3, 3, 3}, {2, 2, 3, 3, 2, 2, 3, 3}};
    const int xs[4] = {26, 35, 36, 39};
    for (int k = 0; k < 8; ++k) {
        TableCell c;
        c.id = "a=" + std::to_string(cols[k].a) + ", b in {";
        for (size_t i = 0; i < cols[k].bs.size(); ++i) c.id += (i ? "," : "") + std::to_string(cols[k].bs[i]);
        c.id += "}";
        c.kind = CellKind::KeyValues;
        c.a = cols[k].a;
        c.bs = cols[k].bs;
        for (int r = 0; r < 4; ++r) {
            c.keys.push_back({xpq(xs[r], -1), minus[r][k], -1});
            c.keys.push_back({xpq(xs[r], 0), 1, 0});
            c.keys.push_back({xpq(xs[r], 1), -plus[r][k], 1});
        }
        t.cells.push_back(c);
    }
    return t;
}

// ---- Table 10: general cases for Σ(2,3,7,p,q)
ProbeTable table_237_general() {
    ProbeTable t;
    t.number = 10;
    t.name = "237-compmod42";
    t.caption = "General cases for Sigma(2,3,7,p,q)";
    t.family = Family::S237;
    t.p_min = 11;
    t.p_max = 200;
    t.q_max = 3000;
    Threshold A = thr237();
    struct Row {
        int res;
        int cell[4][3];  // x, k_start, k_end; x = 0 delegates to table k_start
    };
    const Row rows[] = {
        {1, {{26, -1, 0}, {0, 11, 0}, {26, 0, 1}, {26, 0, 1}}},
        {5, {{26, -1, 0}, {26, -1, 0}, {39, 0, 1}, {35, 0, 1}}},
        {11, {{26, -1, 0}, {26, -1, 0}, {36, 0, 3}, {26, 0, 1}}},
        {13, {{26, -1, 0}, {26, -1, 0}, {35, 0, 1}, {26, 0, 1}}},
        {17, {{26, -1, 0}, {26, -1, 0}, {26, -1, 0}, {35, 0, 1}}},
        {19, {{26, -1, 0}, {36, 0, 2}, {35, 0, 1}, {26, 0, 1}}},
        {23, {{26, -1, 0}, {26, -1, 0}, {36, 0, 3}, {35, 0, 1}}},
        {25, {{26, -1, 0}, {36, 0, 1}, {26, 0, 1}, {26, 0, 1}}},
        {29, {{26, -1, 0}, {26, -1, 0}, {36, 0, 1}, {26, 0, 1}}},
        {31, {{26, -1, 0}, {26, -1, 0}, {35, 0, 1}, {26, 0, 1}}},
        {37, {{26, -1, 0}, {36, 0, 3}, {35, 0, 1}, {26, 0, 1}}},
        {41, {{26, -1, 0}, {26, -1, 0}, {26, -1, 0}, {35, 0, 1}}},
    };
    for (const Row& r : rows) {
        for (int e = 0; e < 4; ++e) {
            std::string id = "pq=" + std::to_string(r.res) + " mod 42, e0=" + std::to_string(-(e + 1));
            TableCell c;
            if (r.cell[e][0] == 0) {
                c = delegated(id, r.cell[e][1]);
            } else {
                const int* w = r.cell[e];
                c = window(id, xpq(w[0], w[1]), xpq(w[0], w[2]), A);
            }
            if (r.res == 25 && e == 1) c.note = "printed 36pq, 36pq+1, 36pq+1; read as 36pq..36pq+1";
            if (r.res == 29 && e == 1) c.note = "printed 26pq-1, 26pq-1; read as 26pq-1..26pq";
            c.residues = {r.res};
            c.e0 = -(e + 1);
            t.cells.push_back(c);
        }
    }
    return t;
}

// ---- Table 11: Σ(2,3,7,p,q), pq ≡ 1 mod 42, e₀ = −2
ProbeTable table_237_1mod42() {
    ProbeTable t;
    t.number = 11;
    t.name = "237-1mod42";
    t.caption = "pq = 1 mod 42, e0 = -2";
    t.family = Family::S237;
    t.p_min = 11;
    t.p_max = 300;
    t.q_max = 4000;
    std::vector<Bin> b = {bin(0, 1, 1, 2), bin(1, 2, 1, 1)};
    Threshold A = thr237();
    Threshold B = thr(84, {{43, 1806}, {47, 394}, {53, 202}, {55, 177}, {59, 145}, {61, 134},
                           {65, 118}, {67, 112}, {71, 102}, {73, 98}, {79, 89}});
    Lin bp;  // 63pq − 42p′q
    bp.pq = 63;
    bp.ppq = -42;
    Lin bp1 = bp;
    bp1.c = -1;
    Lin bq;  // 63pq − 42pq′
    bq.pq = 63;
    bq.pqp = -42;
    Lin bq1 = bq;
    bq1.c = -1;
    TableCell grid[2][2] = {
        {window("", xpq(39, 0), xpq(39, 2), A), window("", bp1, bp, B)},
        {window("", bq1, bq, B), window("", bq1, bq, B)},
    };
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k < 2; ++k) {
            TableCell c = grid[r][k];
            c.id = bins_id(r, k);
            c.residues = {1};
            c.e0 = -2;
            place(c, b, b, r, k);
            t.cells.push_back(c);
        }
    return t;
}

// ---- Table 12: Σ(2,3,11,13,p)
ProbeTable table_2311() {
    ProbeTable t;
    t.number = 12;
    t.name = "2-3-11-13-p";
    t.caption = "General cases for Sigma(2,3,11,13,p), with the Delta(781p) evaluation";
    t.family = Family::S2_3_11_13;
    t.p_min = 17;
    t.p_max = 60000;
    Threshold always = thr(0, {}, -1);  // no q in this family
    auto p781 = [](int64_t k) {
        Lin l;
        l.p = 781;
        l.c = k;
        return l;
    };
    const int classes[3] = {1, 12, -1};
    auto cname = [](int c) { return c == -1 ? std::string("c not in {1,12}") : "c=" + std::to_string(c); };
    // Δ(781p) = 1 and Δ(781p ± 1) by (a, c)
    for (int a = 1; a <= 2; ++a)
        for (int c : classes) {
            TableCell k;
            k.id = "781p identity, a=" + std::to_string(a) + ", " + cname(c);
            k.kind = CellKind::KeyValues;
            k.a = a;
            k.cclass = c;
            int plus = (a == 1 && c == 1) ? 1 : ((a == 1) != (c == 1) ? 2 : 3);
            int minus = (a == 1 && c != 12) ? 2 : ((a == 1) != (c != 12) ? 3 : 4);
            k.keys = {{p781(-1), minus, -1}, {p781(0), 1, 0}, {p781(1), -plus, 1}};
            t.cells.push_back(k);
        }
    // window table; 0 = blank
    const int grid[6][3] = {
        // e₀ = −1, −2, −3 : −1 → (781p−1, 781p), +1 → (781p, 781p+1)
        {-1, 1, 1},   // a=1, c=1
        {-1, -1, 1},  // a=1, c=12
        {-1, 0, 1},   // a=1, other
        {-1, -1, 1},  // a=2, c=1
        {-1, -1, -1}, // a=2, c=12
        {-1, -1, 0},  // a=2, other
    };
    for (int a = 1; a <= 2; ++a)
        for (int ci = 0; ci < 3; ++ci)
            for (int e = 0; e < 3; ++e) {
                int v = grid[(a - 1) * 3 + ci][e];
                std::string id = "a=" + std::to_string(a) + ", " + cname(classes[ci]) + ", e0=" + std::to_string(-(e + 1));
                TableCell c;
                if (v == -1) {
                    c = window(id, p781(-1), p781(0), always);
                } else if (v == 1) {
                    c = window(id, p781(0), p781(1), always);
                } else if (a == 1) {
                    // Δ(1287p − 858p′) = 1 = Δ(2387p − 858p′), first below N₀/2
                    Lin s, en;
                    s.p = 1287;
                    s.pp = -858;
                    en.p = 2387;
                    en.pp = -858;
                    c = window(id, s, en, always);
                    c.half_on_start = true;
                    c.note = "blank cell, covered by the 1287p-858p' / 2387p-858p' case";
                } else {
                    Lin s, en;
                    s.p = 1573;
                    s.pp = -858;
                    s.c = -1;
                    en.p = 1573;
                    en.pp = -858;
                    c = window(id, s, en, always);
                    c.note = "blank cell; the 1573p-858p' case is stated for a=1, |e0|=3, which the table "
                             "already covers, so it is read as this cell";
                }
                c.a = a;
                c.cclass = classes[ci];
                c.e0 = -(e + 1);
                t.cells.push_back(c);
            }
    return t;
}

std::vector<ProbeTable> build_catalogue() {
    return {table_235_keys(),    table_235_general(), table_235_1mod30(), table_235_13mod30(),
            table_235_17mod30(), table_235_29mod30(), table_2357_13(),    table_2357_17(),
            table_237_keys(),    table_237_general(), table_237_1mod42(), table_2311()};
}

}  // namespace

const std::vector<ProbeTable>& catalogue() {
    static const std::vector<ProbeTable> cat = build_catalogue();
    return cat;
}

const ProbeTable& find_table(const std::string& key) {
    for (const auto& t : catalogue())
        if (t.name == key || std::to_string(t.number) == key) return t;
    throw InvalidInput("unknown table '" + key + "' (use 1-12 or a table name)");
}

// ---------------------------------------------------------------- samples

namespace {

std::vector<int64_t> fixed_fibers(Family f) {
    switch (f) {
        case Family::S235: return {2, 3, 5};
        case Family::S237: return {2, 3, 7};
        case Family::S2_3_11_13: return {2, 3, 11, 13};
    }
    return {};
}

int64_t modulus(Family f) { return f == Family::S235 ? 30 : (f == Family::S237 ? 42 : 858); }

}  // namespace

std::optional<FamilySample> family_sample(Family f, int64_t p, int64_t q) {
    std::vector<int64_t> fib = fixed_fibers(f);
    if (p <= fib.back()) return std::nullopt;
    if (f == Family::S2_3_11_13) {
        if (q != 0) return std::nullopt;
    } else if (q <= p) {
        return std::nullopt;
    }
    for (int64_t x : fib) {
        if (std::gcd(x, p) != 1) return std::nullopt;
        if (q && std::gcd(x, q) != 1) return std::nullopt;
    }
    if (q && std::gcd(p, q) != 1) return std::nullopt;
    fib.push_back(p);
    if (q) fib.push_back(q);
    FamilySample s;
    s.family = f;
    s.p = p;
    s.q = q;
    s.sp = SeifertParams::make(fib);
    s.sol = solve_diophantine(s.sp);
    s.n0 = n0(s.sp);
    const auto& pp = s.sol.pprime;
    if (f == Family::S2_3_11_13) {
        s.a = static_cast<int>(pp[1]);
        s.b = static_cast<int>(pp[2]);
        s.c = static_cast<int>(pp[3]);
        s.pp = pp[4];
    } else {
        s.residue = static_cast<int>(mod_pos(mul_ck(p, q), modulus(f)));
        s.a = static_cast<int>(pp[1]);
        s.b = static_cast<int>(pp[2]);
        s.pp = pp[3];
        s.qp = pp[4];
    }
    return s;
}

bool cell_applies(const TableCell& cell, const FamilySample& s) {
    if (!cell.residues.empty() &&
        std::find(cell.residues.begin(), cell.residues.end(), s.residue) == cell.residues.end())
        return false;
    if (cell.e0 != 0 && s.sol.e0 != cell.e0) return false;
    if (cell.a != 0 && s.a != cell.a) return false;
    if (!cell.bs.empty() && std::find(cell.bs.begin(), cell.bs.end(), s.b) == cell.bs.end()) return false;
    if (cell.cclass == 1 && s.c != 1) return false;
    if (cell.cclass == 12 && s.c != 12) return false;
    if (cell.cclass == -1 && (s.c == 1 || s.c == 12)) return false;
    if (cell.pbin && !cell.pbin->contains(Rat(s.pp, s.p))) return false;
    if (cell.qbin && (s.q == 0 || !cell.qbin->contains(Rat(s.qp, s.q)))) return false;
    return true;
}

namespace {

// longest window the engine will walk
constexpr i128 kMaxWindow = 1'000'000;

// two positive entries of the Δ-sequence in [s, t] with no negative entry between them;
// merging them produces an entry >= 2
bool window_has_double(const FamilySample& s, i128 a, i128 b, std::string* vals) {
    int64_t run = 0;
    bool hit = false;
    for (i128 n = a; n <= b; ++n) {
        i128 v = delta_at(s.sp, s.sol, n);
        if (vals && b - a < 16) *vals += (n == a ? "" : ",") + to_string(v);
        if (v > 0) {
            run += static_cast<int64_t>(v);
            if (run >= 2) hit = true;
        } else if (v < 0) {
            run = 0;
        }
    }
    return hit;
}

}  // namespace

SampleCheck verify_sample(const TableCell& cell, const FamilySample& s) {
    SampleCheck r;
    r.applicable = cell_applies(cell, s);
    if (!r.applicable) return r;
    const i128 e = -s.sol.e0;
    auto fail = [&](std::string m) {
        r.ok = false;
        r.mismatches.push_back(std::move(m));
    };
    auto at = [&](const Lin& l) { return l.eval(s.p, s.q, s.pp, s.qp); };
    auto antisym = [&](i128 x) {
        if (x < 0 || x > s.n0) return;
        if (delta_at(s.sp, s.sol, s.n0 - x) != -delta_at(s.sp, s.sol, x))
            fail("antisymmetry broken at " + to_string(x));
    };
    if (cell.kind == CellKind::KeyValues) {
        for (const auto& k : cell.keys) {
            i128 x = at(k.at);
            if (x < 0) {
                fail(k.at.str() + " is negative");
                continue;
            }
            i128 want = k.c0 + k.sign * e;
            i128 got = delta_at(s.sp, s.sol, x);
            if (got != want)
                fail("Delta(" + k.at.str() + ") = " + to_string(got) + ", expected " + to_string(want));
            antisym(x);
        }
    } else if (cell.kind == CellKind::Window) {
        i128 a = at(cell.start), b = at(cell.end);
        if (a < 0 || b < a || b >= s.n0) {
            fail("window [" + to_string(a) + ", " + to_string(b) + "] outside [0, N0)");
            return r;
        }
        if (b - a > kMaxWindow) {
            fail("window longer than " + to_string(kMaxWindow));
            return r;
        }
        std::string vals;
        if (!window_has_double(s, a, b, &vals))
            fail("no two positive entries without a negative in " + cell.start.str() + " .. " + cell.end.str() +
                 (vals.empty() ? "" : " (values " + vals + ")"));
        antisym(a);
        antisym(b);
        if (cell.threshold.claimed && cell.threshold.holds(s.p, s.q)) {
            r.half_checked = true;
            i128 h = cell.half_on_start ? a : b;
            if (mul_ck(2, h) >= s.n0) fail("probe " + to_string(h) + " is not below N0/2 = " + to_string(s.n0) + "/2");
        }
    }
    return r;
}

// ---------------------------------------------------------------- certificates

std::optional<std::string> certify_unsatisfiable(const ProbeTable& t, const TableCell& cell) {
    if (cell.e0 == 0) return std::nullopt;
    const Rat target(-cell.e0);
    // |e₀| = 1/2 + a/3 + b/r (+ c/13) + p′/p (+ q′/q) + 1/(M·p·q)
    struct Combo {
        Rat k;
    };
    std::vector<Rat> ks;
    i128 M = 0, pq_min = 0;
    if (t.family == Family::S2_3_11_13) {
        M = 858;
        pq_min = 17;
        std::vector<int> as = cell.a ? std::vector<int>{cell.a} : std::vector<int>{1, 2};
        for (int a : as)
            for (int b = 1; b <= 10; ++b)
                for (int c = 1; c <= 12; ++c) {
                    if (cell.cclass == 1 && c != 1) continue;
                    if (cell.cclass == 12 && c != 12) continue;
                    if (cell.cclass == -1 && (c == 1 || c == 12)) continue;
                    ks.push_back(Rat(1, 2) + Rat(a, 3) + Rat(b, 11) + Rat(c, 13));
                }
    } else {
        const bool s235 = t.family == Family::S235;
        M = s235 ? 30 : 42;
        const int r = s235 ? 5 : 7;
        // (a, b) is fixed by pq mod M
        for (int res : cell.residues)
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; b < r; ++b) {
                    // −1 ≡ M/2·pq + M/3·a·pq + M/r·b·pq (mod M)
                    i128 v = mod_pos(static_cast<i128>(res) * (M / 2 + (M / 3) * a + (M / r) * b) + 1, M);
                    if (v == 0) ks.push_back(Rat(1, 2) + Rat(a, 3) + Rat(b, r));
                }
        pq_min = t.p_fixed ? t.p_fixed * (t.p_fixed + 1) : 7 * 11;
    }
    if (ks.empty()) return "no (a, b) solves the residue condition";

    const Bin full{Rat(0), Rat(1)};
    const Bin pb = cell.pbin.value_or(full), qb = cell.qbin.value_or(full);
    const Rat eps(1, M * pq_min);

    if (t.p_fixed) {
        // enumerate p′; then q′/q = X − 1/(M·7·q) ∈ [X − eps, X)
        const i128 p = t.p_fixed;
        for (const Rat& k : ks)
            for (i128 pp = 1; pp < p; ++pp) {
                if (!pb.contains(Rat(pp, p))) continue;
                Rat X = target - k - Rat(pp, p);
                Rat lo = X - eps;
                // does [lo, X) meet (qb.lo, qb.hi] ∩ (0, 1)?
                Rat a = qb.lo, b = qb.hi;
                if (b < lo || X <= a || !(Rat(0) < X) || Rat(1) < lo) continue;
                return std::nullopt;
            }
        return "no p' in the column fits: |e0| - K - p'/7 leaves q'/q outside the row for every admissible p'";
    }
    for (const Rat& k : ks) {
        // open lower end, upper end includes the 1/(M·pq) term
        Rat lo = k + pb.lo + qb.lo;
        Rat hi = k + pb.hi + (t.family == Family::S2_3_11_13 ? Rat(0) : qb.hi) + eps;
        if (lo < target && target <= hi) return std::nullopt;
    }
    return "|e0| = K + p'/p + q'/q + 1/(M pq) cannot equal " + to_string(-cell.e0) + " inside the cell";
}

// ---------------------------------------------------------------- engine

TableReport verify_table(const ProbeTable& t, int samples, uint64_t seed) {
    TableReport rep;
    rep.number = t.number;
    rep.name = t.name;
    rep.seed = seed;
    rep.samples_requested = samples;

    // admissible family members in the box, in increasing (p, q)
    std::vector<FamilySample> box;
    for (int64_t p = t.p_min; p <= t.p_max; ++p) {
        if (t.p_fixed && p != t.p_fixed) continue;
        if (t.family == Family::S2_3_11_13) {
            if (auto s = family_sample(t.family, p, 0)) box.push_back(std::move(*s));
            continue;
        }
        for (int64_t q = p + 1; q <= t.q_max; ++q)
            if (auto s = family_sample(t.family, p, q)) box.push_back(std::move(*s));
    }

    rep.pass = true;
    for (size_t ci = 0; ci < t.cells.size(); ++ci) {
        const TableCell& cell = t.cells[ci];
        CellReport cr;
        cr.id = cell.id;
        if (cell.kind == CellKind::Delegated) {
            cr.status = "DELEGATED";
            cr.detail = "see table " + std::to_string(cell.delegate);
            rep.cells.push_back(cr);
            continue;
        }
        std::vector<size_t> cand;
        int64_t any_match = 0;
        for (size_t i = 0; i < box.size(); ++i) {
            if (!cell_applies(cell, box[i])) continue;
            ++any_match;
            if (cell.kind == CellKind::Window && cell.threshold.claimed &&
                !cell.threshold.holds(box[i].p, box[i].q))
                continue;
            cand.push_back(i);
        }
        cr.candidates = static_cast<int64_t>(cand.size());

        auto cert = certify_unsatisfiable(t, cell);
        if (cert) {
            if (any_match > 0) {
                cr.status = "FAIL";
                cr.detail = "certificate contradicted by " + std::to_string(any_match) + " members in the box";
            } else {
                cr.status = "UNSATISFIABLE";
                cr.detail = *cert;
            }
            if (!cell.note.empty()) cr.detail += "; " + cell.note;
            rep.pass = rep.pass && cr.status != "FAIL";
            rep.cells.push_back(cr);
            continue;
        }
        if (cell.kind == CellKind::Unsatisfiable) {
            cr.status = "FAIL";
            cr.detail = "marked impossible but the interval certificate does not exclude it";
            if (any_match > 0) cr.detail += "; " + std::to_string(any_match) + " members found in the box";
            rep.pass = false;
            rep.cells.push_back(cr);
            continue;
        }

        // smallest few, then seeded random picks from the rest
        std::vector<size_t> pick;
        const size_t want = static_cast<size_t>(std::max(samples, 0));
        const size_t head = std::min<size_t>({cand.size(), want, 5});
        pick.assign(cand.begin(), cand.begin() + head);
        std::vector<size_t> rest(cand.begin() + head, cand.end());
        SplitMix64 rng(derive_seed(seed, t.number, ci));
        for (size_t k = 0; k < rest.size() && pick.size() < want; ++k) {
            size_t j = k + rng.below(rest.size() - k);
            std::swap(rest[k], rest[j]);
            pick.push_back(rest[k]);
        }
        std::sort(pick.begin(), pick.end());

        for (size_t i : pick) {
            const FamilySample& s = box[i];
            cr.samples.emplace_back(s.p, s.q);
            SampleCheck sc = verify_sample(cell, s);
            if (sc.half_checked) ++cr.half_checked;
            if (!sc.ok) {
                ++cr.mismatches;
                if (cr.detail.empty())
                    cr.detail = "(" + std::to_string(s.p) + "," + std::to_string(s.q) + "): " + sc.mismatches.front();
            }
        }
        if (cr.mismatches > 0)
            cr.status = "FAIL";
        else if (pick.size() < want)
            cr.status = "INSUFFICIENT";
        else
            cr.status = "PASS";
        if (!cell.note.empty()) cr.detail += (cr.detail.empty() ? "" : "; ") + cell.note;
        rep.pass = rep.pass && cr.status == "PASS";
        rep.cells.push_back(cr);
    }
    return rep;
}

std::optional<std::string> window_witness(const SeifertParams& sp) {
    if (sp.l() != 5 || sp.p[0] != 2 || sp.p[1] != 3) return std::nullopt;
    std::optional<FamilySample> s;
    if (sp.p[2] == 5 || sp.p[2] == 7) {
        if (!fits_i64(sp.p[4])) return std::nullopt;
        s = family_sample(sp.p[2] == 5 ? Family::S235 : Family::S237, to_i64(sp.p[3]), to_i64(sp.p[4]));
    } else if (sp.p[2] == 11 && sp.p[3] == 13) {
        if (!fits_i64(sp.p[4])) return std::nullopt;
        s = family_sample(Family::S2_3_11_13, to_i64(sp.p[4]), 0);
    }
    if (!s) return std::nullopt;
    for (const auto& t : catalogue()) {
        if (t.family != s->family || (t.p_fixed && t.p_fixed != s->p)) continue;
        for (const auto& cell : t.cells) {
            if (cell.kind != CellKind::Window || !cell_applies(cell, *s)) continue;
            i128 a = cell.start.eval(s->p, s->q, s->pp, s->qp);
            i128 b = cell.end.eval(s->p, s->q, s->pp, s->qp);
            // the witness must sit entirely below N₀/2 to pair with its mirror image
            if (a < 0 || b < a || b - a > kMaxWindow || mul_ck(2, b) >= s->n0) continue;
            if (window_has_double(*s, a, b, nullptr))
                return "table " + std::to_string(t.number) + " cell [" + cell.id + "]: " + cell.start.str() + " .. " +
                       cell.end.str();
        }
    }
    return std::nullopt;
}

std::string to_json(const TableReport& r) {
    nlohmann::ordered_json j;
    j["table"] = r.number;
    j["name"] = r.name;
    j["seed"] = r.seed;
    j["samples"] = r.samples_requested;
    j["pass"] = r.pass;
    auto cells = nlohmann::ordered_json::array();
    for (const auto& c : r.cells) {
        nlohmann::ordered_json x;
        x["cell"] = c.id;
        x["status"] = c.status;
        x["candidates"] = c.candidates;
        x["checked"] = c.samples.size();
        x["mismatches"] = c.mismatches;
        x["half_checked"] = c.half_checked;
        auto sm = nlohmann::ordered_json::array();
        for (auto [p, q] : c.samples) sm.push_back(q ? nlohmann::ordered_json::array({p, q}) : nlohmann::ordered_json(p));
        x["samples"] = sm;
        x["detail"] = c.detail;
        cells.push_back(x);
    }
    j["cells"] = cells;
    return j.dump();
}

}  // namespace sfhs
