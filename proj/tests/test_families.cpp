#include "doctest.h"
#include "kiso/bounds.hpp"
#include "kiso/enumerate.hpp"
#include "kiso/errors.hpp"
#include "kiso/families.hpp"
#include "oracles.hpp"

using namespace kiso;

namespace {

Tree path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return as_tree(build_graph(n, e));
}

Tree star(int k) {
    std::vector<Edge> e;
    for (int i = 1; i <= k; ++i) e.push_back({0, i});
    return as_tree(build_graph(k + 1, e));
}

bool same_tree(const Tree& a, const Tree& b) { return canonical_code(a) == canonical_code(b); }

// Joins vertex `at` of `a` to vertex `to` of `b` (b renumbered after a).
Tree join(const Tree& a, Vertex at, const Tree& b, Vertex to) {
    auto e = a.graph().edges();
    for (auto [u, v] : b.graph().edges()) e.push_back({u + a.order(), v + a.order()});
    e.push_back({at, to + a.order()});
    return as_tree(build_graph(a.order() + b.order(), e));
}

Rational plus_bound(const Tree& t) { return Rational(t.order() + t.leaf_count(), 4); }
Rational star_bound(const Tree& t, int k) { return Rational(t.order() + t.leaf_count(), 2 * k + 1); }

} // namespace

TEST_SUITE("family-F") {

TEST_CASE("generator examples") {
    auto p6 = gen_family_F(2, 0);
    CHECK(same_tree(p6.tree, path(6)));
    CHECK(validate(p6.tree, p6.cert).empty());

    auto f21 = gen_family_F(2, 1);
    CHECK(f21.tree.order() == 10);
    CHECK(oracle::iota(f21.tree.graph(), 1) == 3);
    CHECK(validate(f21.tree, f21.cert).empty());

    auto f30 = gen_family_F(3, 0);
    CHECK(f30.tree.order() == 9);
    CHECK(oracle::iota(f30.tree.graph(), 1) == 3);
    CHECK(plus_bound(f30.tree) == Rational(3));
}

TEST_CASE("custom wiring") {
    // r = 2, s = 1: a = 0, 3; x = 6, x' = 9.
    auto inst = gen_family_F(2, 1, std::vector<Edge>{{0, 6}, {3, 9}});
    CHECK(validate(inst.tree, inst.cert).empty());
    CHECK(iota_tree_dp(inst.tree, 1).size() == 3);

    CHECK_THROWS_AS(gen_family_F(2, 1, std::vector<Edge>{{0, 6}, {3, 6}}), FamilyError);      // x' stays a leaf
    CHECK_THROWS_AS(gen_family_F(2, 1, std::vector<Edge>{{0, 6}, {0, 9}, {3, 9}}), FamilyError); // cycle
    CHECK_THROWS_AS(gen_family_F(2, 1, std::vector<Edge>{{0, 3}}), FamilyError);             // disconnected
    CHECK_THROWS_AS(gen_family_F(2, 1, std::vector<Edge>{{1, 6}, {3, 9}}), FamilyError);      // B endpoint
    CHECK_THROWS_AS(gen_family_F(1, 0), FamilyError);
}

TEST_CASE("recognize_F examples") {
    auto c = recognize_F(path(6));
    REQUIRE(c.has_value());
    CHECK(c->A.size() == 2);
    CHECK(!recognize_F(path(7)).has_value());
    CHECK(!recognize_F(path(2)).has_value());
    CHECK(!recognize_F(star(5)).has_value());
}

TEST_CASE("round trip on random members") {
    for (int r = 2; r <= 5; ++r)
        for (int s = 0; s <= 3; ++s)
            for (std::uint64_t seed = 0; seed < 6; ++seed) {
                auto inst = random_family_F(r, s, seed);
                CHECK(inst.tree.order() == 3 * r + 4 * s);
                CHECK(validate(inst.tree, inst.cert).empty());
                auto c = recognize_F(inst.tree);
                REQUIRE(c.has_value());
                CHECK(validate(inst.tree, *c).empty());
                CHECK(c->p3_count() == r);
                CHECK(c->p4_count() == s);
                const int iota = iota_tree_dp(inst.tree, 1).size();
                CHECK(Rational(iota) == plus_bound(inst.tree));
                CHECK(iota == r + s);
                for (Vertex root : {c->A.front(), c->A.back()}) {
                    auto d = min_iso_set_F(inst.tree, *c, root);
                    CHECK(d.size() == iota);
                    CHECK(is_isolating(inst.tree.graph(), d.set, 1));
                }
                if (!c->X.empty()) {
                    auto d = min_iso_set_F(inst.tree, *c, c->X.back());
                    CHECK(d.size() == iota);
                    CHECK(is_isolating(inst.tree.graph(), d.set, 1));
                }
            }
}

TEST_CASE("recognize_F matches the labeling oracle") {
    for (int n = 1; n <= 12; ++n)
        for_each_free_tree(n, [&](const Tree& t) {
            CHECK_MESSAGE(recognize_F(t).has_value() == oracle::in_family_F(t.graph()), canonical_code(t));
        });
}

TEST_CASE("min_iso_set_F examples") {
    auto p6 = gen_family_F(2, 0);
    for (Vertex a : p6.cert.A) {
        auto d = min_iso_set_F(p6.tree, p6.cert, a);
        CHECK(d.set == p6.cert.A);
        CHECK(d.method == SolveMethod::family_construction);
    }
    auto f21 = gen_family_F(2, 1);
    auto d = min_iso_set_F(f21.tree, f21.cert, f21.cert.A.front());
    CHECK(d.size() == 3);
    CHECK(d.size() == oracle::iota(f21.tree.graph(), 1));
    CHECK(is_isolating(f21.tree.graph(), d.set, 1));
    auto f30 = gen_family_F(3, 0);
    for (Vertex root : f30.cert.A) CHECK(min_iso_set_F(f30.tree, f30.cert, root).set == f30.cert.A);
    CHECK_THROWS(min_iso_set_F(p6.tree, p6.cert, p6.cert.C.front()));
}

TEST_CASE("validate names broken properties") {
    auto p6 = gen_family_F(2, 0);
    FCertificate bad = p6.cert;
    std::swap(bad.A, bad.B);
    CHECK(!validate(p6.tree, bad).empty());
}

TEST_CASE("exclusion patterns are rejected with strict inequality") {
    // Strong support, a pendant P4 hung from a degree-2 vertex, and a pendant
    // P5 hung from a support vertex.
    Tree p4 = path(4), p5 = path(5);
    int checked = 0;
    for (int m = 1; m <= 6; ++m)
        for_each_free_tree(m, [&](const Tree& base) {
            for (Vertex at = 0; at < base.order(); ++at) {
                for (const Tree& t : {join(base, at, p4, 1), join(base, at, p5, 1)}) {
                    CHECK(!recognize_F(t).has_value());
                    CHECK(Rational(oracle::iota(t.graph(), 1)) < plus_bound(t));
                    ++checked;
                }
            }
        });
    CHECK(checked > 100);
    for (int n = 3; n <= 11; ++n)
        for_each_free_tree(n, [&](const Tree& t) {
            if (t.strong_supports().empty()) return;
            CHECK(!recognize_F(t).has_value());
            CHECK(Rational(iota_tree_dp(t, 1).size()) < plus_bound(t));
        });
}

TEST_CASE("small diameter trees") {
    for (int n = 2; n <= 12; ++n)
        for_each_free_tree(n, [&](const Tree& t) {
            const int d = diameter(t);
            if (d < 2 || d > 3) return;
            CHECK(iota_tree_dp(t, 1).size() == 1);
            CHECK(Rational(1) < plus_bound(t));
        });
}

} // TEST_SUITE

TEST_SUITE("family-Tk") {

TEST_CASE("P8 is the smallest member for k = 2") {
    TkWiring w;
    w.n0 = 2;
    w.a_forest = {{0, 1}};
    w.c_groups = {{0}, {1}};
    auto inst = gen_family_Tk(2, w);
    CHECK(same_tree(inst.tree, path(8)));
    CHECK(inst.cert.h == 1);
    CHECK(inst.cert.n0 == 2);
    CHECK(inst.tree.order() == 8);

    auto c = recognize_Tk(path(8), 2);
    REQUIRE(c.has_value());
    CHECK(c->A.size() == 2);
    CHECK(c->B.size() == 2);
    CHECK(validate(path(8), *c, 2).empty());
    auto d = min_iso_set_Tk(path(8), *c, 2);
    CHECK(d.size() == 2);
    CHECK(d.set == c->A);
    CHECK(is_isolating(path(8).graph(), d.set, 2));
}

TEST_CASE("recognize_Tk rejections") {
    for (int k = 2; k <= 6; ++k) CHECK(!recognize_Tk(star(k), k).has_value());
    CHECK(!recognize_Tk(path(9), 2).has_value());
    CHECK(Rational(oracle::iota(path(9).graph(), 2)) < star_bound(path(9), 2));
    CHECK_THROWS(recognize_Tk(path(8), 1));
}

TEST_CASE("k = 4 with one C per B") {
    TkWiring w;
    w.n0 = 2;
    w.a_forest = {{0, 1}};
    w.c_groups = {{0}, {1}};
    auto inst = gen_family_Tk(4, w);
    CHECK(inst.tree.order() == 12);
    CHECK(oracle::iota(inst.tree.graph(), 4) == 2);
    CHECK(inst.cert.C.size() == 2);
}

TEST_CASE("generator clause errors") {
    TkWiring w;
    w.n0 = 2;
    w.c_groups = {{0}, {1}};
    CHECK_THROWS_AS(gen_family_Tk(2, w), FamilyError); // isolated A vertices
    CHECK_THROWS_AS(random_Tk_wiring(2, 2, 2, 0), FamilyError);

    w.a_forest = {{0, 1}};
    w.c_groups = {{0, 1, 1}};
    CHECK_THROWS_AS(gen_family_Tk(2, w), FamilyError); // assigned twice / too many
    w.c_groups = {{0}};
    CHECK_THROWS_AS(gen_family_Tk(2, w), FamilyError); // b_1 without C
    w.c_groups = {{0, 1}};
    CHECK_THROWS_AS(gen_family_Tk(2, w), FamilyError); // cycle a0 b0 c b1 a1
}

TEST_CASE("random members: round trip and the constructive set") {
    for (int k = 2; k <= 4; ++k)
        for (int h = 1; h <= 2; ++h)
            for (int n0 = 2 * h; n0 <= 6; ++n0)
                for (std::uint64_t seed = 0; seed < 4; ++seed) {
                    auto inst = gen_family_Tk(k, random_Tk_wiring(k, n0, h, seed));
                    const Tree& t = inst.tree;
                    CHECK(validate(t, inst.cert, k).empty());
                    CHECK(t.order() == (k + 2) * n0 - (k + 1) * (h - 1));
                    CHECK(t.order() >= 2 * k + 4);
                    auto c = recognize_Tk(t, k);
                    REQUIRE(c.has_value());
                    CHECK(validate(t, *c, k).empty());
                    const int iota = iota_tree_dp(t, k).size();
                    CHECK(iota == static_cast<int>(inst.cert.C.size()));
                    CHECK(Rational(iota) == star_bound(t, k));
                    auto d = min_iso_set_Tk(t, *c, k);
                    CHECK(d.size() == iota);
                    CHECK(is_isolating(t.graph(), d.set, k));
                    if (c->h == 1) CHECK(d.set == c->A);
                    // C vertices are pairwise at distance at least 5
                    for (Vertex u : c->C) {
                        auto dist = bfs_distances(t.graph(), u);
                        for (Vertex v : c->C)
                            if (v != u) CHECK(dist[v] >= 5);
                    }
                }
}

TEST_CASE("k = 3, n0 = 4, h = 2") {
    auto inst = gen_family_Tk(3, random_Tk_wiring(3, 4, 2, 7));
    CHECK(inst.tree.order() == 16);
    auto d = min_iso_set_Tk(inst.tree, inst.cert, 3);
    CHECK(d.size() == 3);
    CHECK(is_isolating(inst.tree.graph(), d.set, 3));
    CHECK(iota_bruteforce(inst.tree.graph(), 3).size() == 3);
}

TEST_CASE("recognize_Tk matches the labeling oracle") {
    auto run = [](int k, int max_n) {
        for (int n = 1; n <= max_n; ++n)
            for_each_free_tree(n, [&](const Tree& t) {
                CHECK_MESSAGE(recognize_Tk(t, k).has_value() == oracle::in_family_Tk(t.graph(), k),
                              "k=" << k << " " << canonical_code(t));
            });
    };
    run(2, 11);
    run(3, 12);
    run(4, 12);
}

TEST_CASE("oracle sees the generated members") {
    for (int k = 2; k <= 3; ++k) {
        auto inst = gen_family_Tk(k, random_Tk_wiring(k, 2, 1, 1));
        CHECK(oracle::in_family_Tk(inst.tree.graph(), k));
    }
}

} // TEST_SUITE

TEST_SUITE("family-corona") {

TEST_CASE("corona extremal trees") {
    Tree t = gen_corona_extremal(2, 2, 8);
    CHECK(oracle::iota(t.graph(), 2) == 2);
    CHECK(Rational(t.order() - t.leaf_count(), 2) == Rational(2));

    Tree u = gen_corona_extremal(3, 2, 11);
    CHECK(u.order() == 11);
    CHECK(oracle::iota(u.graph(), 3) == 2);
    CHECK(u.order() - u.leaf_count() == 4);
    CHECK(u.max_degree() == 5); // w_2: v_2, three leaves, one extra

    for (int k = 1; k <= 4; ++k)
        for (int r = 2; r <= 3; ++r)
            for (int extra : {0, 2}) {
                Tree g = gen_corona_extremal(k, r, (k + 2) * r + extra);
                CHECK(iota_tree_dp(g, k).size() == r);
                CHECK(g.order() - g.leaf_count() == 2 * r);
            }
    CHECK_THROWS_AS(gen_corona_extremal(2, 2, 7), PreconditionError);
}

TEST_CASE("r = 1 variant keeps n - l = 2") {
    for (int k = 2; k <= 4; ++k)
        for (int extra : {0, 2}) {
            Tree g = gen_corona_extremal(k, 1, k + 2 + extra);
            CHECK(!is_star(g));
            CHECK(g.order() - g.leaf_count() == 2);
            CHECK(iota_tree_dp(g, k).size() == 1);
        }
}

TEST_CASE("C4 with leaves") {
    auto [g, cert] = gen_char_c4(1, {1, 1, 1, 1});
    CHECK(g.order() == 8);
    CHECK(oracle::iota(g, 1) == 2);
    CHECK(validate(g, cert, 1).empty());
    auto c = recognize_char_orderminusleaves(g, 1);
    REQUIRE(c.has_value());
    CHECK(c->kind == CoronaCertificate::Kind::c4_leaves);
    CHECK_THROWS(gen_char_c4(2, {2, 2, 2, 1}));
}

TEST_CASE("corona with leaves") {
    auto [g, cert] = gen_char_corona(2, build_graph(2, {{0, 1}}), {2, 2}, {0, 0});
    CHECK(g.order() == 8);
    CHECK(oracle::iota(g, 2) == 2);
    CHECK(validate(g, cert, 2).empty());
    auto c = recognize_char_orderminusleaves(g, 2);
    REQUIRE(c.has_value());
    CHECK(c->kind == CoronaCertificate::Kind::corona_with_leaves);

    auto [h, hc] = gen_char_corona(1, build_graph(3, {{0, 1}, {1, 2}, {2, 0}}), {1, 2, 1}, {0, 1, 0});
    CHECK(oracle::iota(h, 1) == 3);
    CHECK(recognize_char_orderminusleaves(h, 1).has_value());
}

TEST_CASE("recognizer rejections") {
    CHECK(!recognize_char_orderminusleaves(path(5).graph(), 1).has_value());
    CHECK(oracle::iota(path(5).graph(), 1) == 1);
    CHECK(!recognize_char_orderminusleaves(star(5).graph(), 1).has_value());
    CHECK(recognize_char_orderminusleaves(path(6).graph(), 1).has_value());
}

TEST_CASE("double stars attain (n-l)/2 for k >= 2 without the structure") {
    // P4 has iota_2 = 1 = (4-2)/2, but its leaf-stripped core K2 would need
    // k = 2 leaves on each corona end. The same holds for every double star
    // whose centers carry fewer than k leaves on one side.
    CHECK(oracle::iota(path(4).graph(), 2) == 1);
    CHECK(!recognize_char_orderminusleaves(path(4).graph(), 2).has_value());
}

TEST_CASE("characterization agrees with the oracle when k = 1") {
    for (int n = 3; n <= 12; ++n)
        for_each_free_tree(n, [&](const Tree& t) {
            const bool eq = Rational(iota_tree_dp(t, 1).size()) == Rational(n - t.leaf_count(), 2);
            CHECK_MESSAGE(eq == recognize_char_orderminusleaves(t.graph(), 1).has_value(), canonical_code(t));
        });
}

} // TEST_SUITE

TEST_SUITE("family-misc") {

TEST_CASE("spider gap") {
    for (int k = 1; k <= 3; ++k) {
        Tree t = gen_spider_gap(k);
        CHECK(t.order() == 2 * k + 3);
        CHECK(t.leaf_count() == 2 * k + 1);
        CHECK(oracle::iota(t.graph(), 1) == 1);
        CHECK(gap_order_plus_leaves(t) == Rational(k));
    }
}

TEST_CASE("twin leaves") {
    auto p6 = gen_family_F(2, 0);
    Vertex b = p6.cert.B.front();
    Tree t = add_twin_leaves(p6.tree, p6.cert, {{b, 1}});
    CHECK(t.order() == 7);
    CHECK(t.leaf_count() == 3);
    CHECK(t.support_count() == 2);
    CHECK(oracle::iota(t.graph(), 1) == 2);
    CHECK(Rational(7 - 3 + 4, 4) == Rational(2));

    Tree same = add_twin_leaves(p6.tree, p6.cert, {});
    CHECK(same.graph() == p6.tree.graph());

    auto f21 = gen_family_F(2, 1);
    std::map<Vertex, int> add;
    for (Vertex v : f21.cert.B) add[v] = 2;
    Tree u = add_twin_leaves(f21.tree, f21.cert, add);
    CHECK(Rational(oracle::iota(u.graph(), 1)) ==
          bound_value(BoundKind::support_bound, u.order(), u.leaf_count(), u.support_count(), 1));
    CHECK(same_tree(strip_twin_leaves(u), f21.tree));

    CHECK_THROWS_AS(add_twin_leaves(p6.tree, p6.cert, {{p6.cert.A.front(), 1}}), FamilyError);
}

TEST_CASE("strip_twin_leaves") {
    CHECK(same_tree(strip_twin_leaves(star(5)), path(2)));
    CHECK(strip_twin_leaves(path(6)).graph() == path(6).graph());
}

TEST_CASE("certificate JSON") {
    auto p6 = gen_family_F(2, 0);
    auto j = to_json(p6.cert);
    CHECK(j["family"] == "F");
    CHECK(j["A"].size() == 2);
    auto tk = to_json(*recognize_Tk(path(8), 2));
    CHECK(tk["family"] == "Tk");
    CHECK(tk["h"] == 1);
}

} // TEST_SUITE
