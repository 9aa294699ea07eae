#include "kiso/bounds.hpp"

#include <algorithm>

#include "kiso/errors.hpp"
#include "kiso/isolation.hpp"

namespace kiso {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view to_string(BoundKind b) {
    switch (b) {
    case BoundKind::order_minus_leaves: return "order_minus_leaves";
    case BoundKind::order_plus_leaves: return "order_plus_leaves";
    case BoundKind::caro_trees: return "caro_trees";
    case BoundKind::star_bound: return "star_bound";
    case BoundKind::support_bound: return "support_bound";
    case BoundKind::boutrig: return "boutrig";
    case BoundKind::caro_third: return "caro_third";
    }
    return "?";
}

Rational bound_value(BoundKind b, int n, int l, int s, int k) {
    using R = Rational;
    switch (b) {
    case BoundKind::order_minus_leaves: return R(n - l, 2);
    case BoundKind::order_plus_leaves: return R(n + l, 4);
    case BoundKind::caro_trees: return R(n, k + 2);
    case BoundKind::star_bound: return R(n + l, 2 * k + 1);
    case BoundKind::support_bound: return R(n - l + 2 * s, 4);
    case BoundKind::boutrig: return R(n - l + s, 3);
    case BoundKind::caro_third: return R(n, 3);
    }
    return R(0);
}

std::string regime_label(Regime r, int k) {
    if (k == 1) {
        switch (r) {
        case Regime::k1_below: return "l < n/3";
        case Regime::at_upper: return "l = n/3";
        case Regime::above_upper: return "l > n/3";
        default: return "?";
        }
    }
    switch (r) {
    case Regime::below_lower: return "l < (k-1)n/(k+2)";
    case Regime::at_lower: return "l = (k-1)n/(k+2)";
    case Regime::between: return "(k-1)n/(k+2) < l < kn/(k+2)";
    case Regime::at_upper: return "l = kn/(k+2)";
    case Regime::above_upper: return "l > kn/(k+2)";
    default: return "?";
    }
}

Regime regime_classify(int n, int l, int k) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    if (l < 0 || l > n) throw PreconditionError("leaf count outside [0, n]");
    // Compare l(k+2) against (k-1)n and kn in integers.
    const long long scaled = static_cast<long long>(l) * (k + 2);
    const long long lower = static_cast<long long>(k - 1) * n;
    const long long upper = static_cast<long long>(k) * n;
    if (k == 1) {
        if (scaled < upper) return Regime::k1_below;
        return scaled == upper ? Regime::at_upper : Regime::above_upper;
    }
    if (scaled < lower) return Regime::below_lower;
    if (scaled == lower) return Regime::at_lower;
    if (scaled < upper) return Regime::between;
    if (scaled == upper) return Regime::at_upper;
    return Regime::above_upper;
}

namespace {

BoundKind governing_bound(Regime r, int k) {
    if (k == 1) return r == Regime::above_upper ? BoundKind::order_minus_leaves : BoundKind::order_plus_leaves;
    switch (r) {
    case Regime::below_lower:
    case Regime::at_lower: return BoundKind::star_bound;
    case Regime::between: return BoundKind::caro_trees;
    default: return BoundKind::order_minus_leaves;
    }
}

} // namespace

Rational regime_bound(Regime r, int n, int l, int k) {
    return bound_value(governing_bound(r, k), n, l, 0, k);
}

std::vector<std::string> regime_relations_failures(Regime r, int n, int l, int k) {
    std::vector<std::string> out;
    const Rational minus = bound_value(BoundKind::order_minus_leaves, n, l, 0, k);
    const Rational plus = bound_value(BoundKind::order_plus_leaves, n, l, 0, k);
    const Rational star = bound_value(BoundKind::star_bound, n, l, 0, k);
    const Rational caro = bound_value(BoundKind::caro_trees, n, l, 0, k);
    auto expect = [&](bool ok, const char* what) {
        if (!ok) out.emplace_back(what);
    };
    if (k == 1) {
        const Rational third(n, 3);
        switch (r) {
        case Regime::k1_below: expect(plus < third, "(n+l)/4 < n/3"); break;
        case Regime::at_upper: expect(plus == minus && minus == third, "(n+l)/4 = (n-l)/2 = n/3"); break;
        case Regime::above_upper: expect(minus < third, "(n-l)/2 < n/3"); break;
        default: expect(false, "k = 1 regime label expected");
        }
        return out;
    }
    switch (r) {
    case Regime::below_lower: expect(star < caro, "(n+l)/(2k+1) < n/(k+2)"); break;
    case Regime::at_lower: expect(star == caro, "(n+l)/(2k+1) = n/(k+2)"); break;
    case Regime::between: break;
    case Regime::at_upper: expect(minus == caro, "(n-l)/2 = n/(k+2)"); break;
    case Regime::above_upper: expect(minus < caro, "(n-l)/2 < n/(k+2)"); break;
    default: expect(false, "k >= 2 regime label expected");
    }
    return out;
}

const BoundEntry& BoundReport::at(BoundKind b) const {
    for (const auto& e : bounds)
        if (e.kind == b) return e;
    throw PreconditionError("bound not in report");
}

std::vector<BoundKind> BoundReport::violated() const {
    std::vector<BoundKind> out;
    for (const auto& e : bounds)
        if (e.applicable && Rational(iota) > e.value) out.push_back(e.kind);
    return out;
}

BoundReport evaluate_bounds(const Tree& t, int k, std::optional<int> iota) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    BoundReport r;
    r.n = t.order();
    r.leaves = t.leaf_count();
    r.supports = t.support_count();
    r.k = k;
    r.iota = iota ? *iota : iota_tree_dp(t, k).size();
    const bool star = is_star(t);

    for (BoundKind b : kAllBounds) {
        BoundEntry e;
        e.kind = b;
        e.value = bound_value(b, r.n, r.leaves, r.supports, k);
        auto na = [&](std::string why) {
            e.applicable = false;
            e.reason = std::move(why);
        };
        switch (b) {
        case BoundKind::order_minus_leaves:
            if (r.n < 3) na("requires n >= 3");
            else if (star) na("fails on stars: G - L(G) is K1, iota = 1 > 1/2");
            break;
        case BoundKind::order_plus_leaves:
            if (k != 1) na("bounds iota_1; star_bound is the bound for k >= 2");
            break;
        case BoundKind::caro_trees:
            if (is_star(t, k)) na("T is the k-star K_{1,k}");
            break;
        case BoundKind::star_bound:
            if (k == 1) e.note = "dominated by order_plus_leaves; not sharp for k = 1";
            break;
        case BoundKind::support_bound:
            if (r.n < 3) na("requires n >= 3");
            else if (r.supports == 1) na("requires s != 1");
            break;
        case BoundKind::boutrig:
            if (r.n < 3) na("requires n >= 3");
            else if (star) na("fails on stars: iota = 1 > 2/3");
            break;
        case BoundKind::caro_third:
            if (r.n == 2) na("T is K2");
            break;
        }
        e.equality = e.applicable && e.value == Rational(r.iota);
        r.bounds.push_back(std::move(e));
    }

    r.regime = regime_classify(r.n, r.leaves, k);
    const BoundEntry& gov = r.at(governing_bound(r.regime, k));
    if (!gov.applicable) {
        r.regime_applicable = false;
        r.regime_reason = std::string(to_string(gov.kind)) + ": " + gov.reason;
    }
    return r;
}

nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["l"] = r.leaves;
    j["s"] = r.supports;
    j["k"] = r.k;
    j["iota"] = r.iota;
    j["regime"] = regime_label(r.regime, r.k);
    if (!r.regime_applicable) j["regime_not_applicable"] = r.regime_reason;
    auto& bounds = j["bounds"] = nlohmann::json::object();
    auto& eq = j["equality"] = nlohmann::json::object();
    nlohmann::json notes = nlohmann::json::object();
    for (const auto& e : r.bounds) {
        const std::string name(to_string(e.kind));
        bounds[name] = e.applicable ? to_string(e.value) : "N/A: " + e.reason;
        eq[name] = e.equality;
        if (!e.note.empty()) notes[name] = e.note;
    }
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

Rational gap_order_plus_leaves(const Tree& t) {
    return Rational(t.order() + t.leaf_count(), 4) - Rational(iota_tree_dp(t, 1).size());
}

} // namespace kiso
