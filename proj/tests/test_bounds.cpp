#include "doctest.h"
#include "kiso/bounds.hpp"
#include "kiso/enumerate.hpp"
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

} // namespace

TEST_SUITE("bounds") {

TEST_CASE("rational formatting") {
    CHECK(to_string(Rational(4, 2)) == "2/1");
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(0, 5)) == "0/1");
}

TEST_CASE("P6 with k = 1") {
    auto r = evaluate_bounds(path(6), 1);
    CHECK(r.iota == 2);
    CHECK(r.at(BoundKind::order_plus_leaves).value == Rational(2));
    CHECK(r.at(BoundKind::order_plus_leaves).equality);
    // l = 2 = 6/3 sits exactly on the k = 1 threshold
    CHECK(r.regime == Regime::at_upper);
    CHECK(regime_label(r.regime, 1) == "l = n/3");
    CHECK(r.violated().empty());
    CHECK(!r.at(BoundKind::star_bound).note.empty());
}

TEST_CASE("stars attain the star bound") {
    for (int k = 2; k <= 7; ++k) {
        auto r = evaluate_bounds(star(k), k);
        CHECK(r.iota == 1);
        CHECK(r.at(BoundKind::star_bound).value == Rational(1));
        CHECK(r.at(BoundKind::star_bound).equality);
        CHECK(!r.at(BoundKind::caro_trees).applicable);
    }
    auto r = evaluate_bounds(star(4), 4);
    auto j = to_json(r);
    CHECK(j["equality"]["star_bound"] == true);
    CHECK(j["bounds"]["star_bound"] == "1/1");
}

TEST_CASE("corona extremal tree attains (n-l)/2") {
    Tree t = gen_corona_extremal(2, 2, 8);
    CHECK(t.order() == 8);
    auto r = evaluate_bounds(t, 2);
    CHECK(r.iota == 2);
    CHECK(r.at(BoundKind::order_minus_leaves).value == Rational(2));
    CHECK(r.at(BoundKind::order_minus_leaves).equality);
}

TEST_CASE("P5 with k = 1 is strict everywhere") {
    auto r = evaluate_bounds(path(5), 1);
    CHECK(r.iota == 1);
    CHECK(oracle::iota(path(5).graph(), 1) == 1);
    for (const auto& e : r.bounds)
        if (e.applicable) CHECK_MESSAGE(!e.equality, to_string(e.kind));
    CHECK(r.at(BoundKind::order_minus_leaves).value == Rational(3, 2));
    CHECK(r.at(BoundKind::order_plus_leaves).value == Rational(7, 4));
}

TEST_CASE("regime classification") {
    CHECK(regime_classify(12, 3, 2) == Regime::at_lower); // 3 = 12/4
    CHECK(regime_classify(12, 4, 2) == Regime::between);  // 3 < 4 < 6
    CHECK(regime_classify(12, 6, 2) == Regime::at_upper);
    CHECK(regime_classify(12, 2, 2) == Regime::below_lower);
    CHECK(regime_classify(12, 7, 2) == Regime::above_upper);
    CHECK(regime_classify(3, 2, 1) == Regime::above_upper);
    CHECK(regime_label(Regime::above_upper, 1) == "l > n/3");
    CHECK(regime_classify(9, 3, 1) == Regime::at_upper);
    CHECK(regime_classify(10, 3, 1) == Regime::k1_below);
    CHECK(regime_label(Regime::at_lower, 2) == "l = (k-1)n/(k+2)");
    CHECK_THROWS(regime_classify(3, 4, 1));
    CHECK_THROWS(regime_classify(3, 1, 0));

    // The thresholds pin the piecewise relations exactly.
    CHECK(regime_relations_failures(Regime::at_lower, 12, 3, 2).empty());
    CHECK(regime_bound(Regime::at_lower, 12, 3, 2) == Rational(3));
    CHECK(regime_relations_failures(Regime::at_upper, 9, 3, 1).empty());
    CHECK(regime_bound(Regime::at_upper, 9, 3, 1) == Rational(3));
}

TEST_CASE("regime relations hold for every (n, l, k)") {
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 40; ++n)
            for (int l = 0; l <= n; ++l) {
                Regime r = regime_classify(n, l, k);
                CHECK(regime_relations_failures(r, n, l, k).empty());
            }
}

TEST_CASE("gap of (n+l)/4") {
    CHECK(gap_order_plus_leaves(gen_spider_gap(1)) == Rational(1));
    CHECK(gap_order_plus_leaves(gen_spider_gap(2)) == Rational(2));
    CHECK(gap_order_plus_leaves(path(6)) == Rational(0));
}

TEST_CASE("every applicable bound holds against the oracle") {
    for (int n = 1; n <= 10; ++n)
        for_each_free_tree(n, [&](const Tree& t) {
            const int l = t.leaf_count(), s = t.support_count();
            for (int k = 1; k <= 3; ++k) {
                const int iota = oracle::iota(t.graph(), k);
                auto r = evaluate_bounds(t, k, iota);
                CHECK(r.violated().empty());
                if (r.regime_applicable) CHECK(Rational(iota) <= regime_bound(r.regime, n, l, k));
                // Independent recomputation of the applicability rules.
                const bool star = n >= 2 && t.max_degree() == n - 1;
                CHECK(r.at(BoundKind::order_minus_leaves).applicable == (n >= 3 && !star));
                CHECK(r.at(BoundKind::order_plus_leaves).applicable == (k == 1));
                CHECK(r.at(BoundKind::caro_trees).applicable == !(star && n == k + 1));
                CHECK(r.at(BoundKind::support_bound).applicable == (n >= 3 && s != 1));
                CHECK(r.at(BoundKind::boutrig).applicable == (n >= 3 && !star));
                CHECK(r.at(BoundKind::caro_third).applicable == (n != 2));
                for (const auto& e : r.bounds)
                    CHECK(e.equality == (e.applicable && e.value == Rational(iota)));
            }
        });
}

TEST_CASE("stars break (n-l)/2 and (n-l+s)/3 as literally stated") {
    // Recorded so the not-applicable marking stays justified.
    for (int k = 2; k <= 6; ++k) {
        Tree t = star(k);
        CHECK(oracle::iota(t.graph(), 1) == 1);
        CHECK(Rational(1) > bound_value(BoundKind::order_minus_leaves, k + 1, k, 1, 1));
        CHECK(Rational(1) > bound_value(BoundKind::boutrig, k + 1, k, 1, 1));
    }
}

TEST_CASE("support bound against (n+l)/4") {
    for (int n = 3; n <= 10; ++n)
        for_each_free_tree(n, [&](const Tree& t) {
            auto r = evaluate_bounds(t, 1);
            Rational sb = bound_value(BoundKind::support_bound, r.n, r.leaves, r.supports, 1);
            Rational op = bound_value(BoundKind::order_plus_leaves, r.n, r.leaves, r.supports, 1);
            CHECK(sb <= op);
            CHECK((sb == op) == t.strong_supports().empty());
        });
}

TEST_CASE("JSON layout") {
    auto j = to_json(evaluate_bounds(star(3), 1));
    CHECK(j["n"] == 4);
    CHECK(j["l"] == 3);
    CHECK(j["s"] == 1);
    CHECK(j["k"] == 1);
    CHECK(j["iota"] == 1);
    CHECK(j["bounds"]["support_bound"].get<std::string>().rfind("N/A", 0) == 0);
    CHECK(j.contains("regime_not_applicable"));
    CHECK(j["notes"].contains("star_bound"));
}

} // TEST_SUITE
