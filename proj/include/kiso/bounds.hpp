#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "kiso/graph.hpp"
#include "json.hpp"

namespace kiso {

using Rational = boost::rational<std::int64_t>;

// "p/q" in lowest terms; integers print as "p/1".
std::string to_string(const Rational& r);

// Closed-form upper bounds on iota_k(T).
enum class BoundKind {
    order_minus_leaves, // (n - l) / 2
    order_plus_leaves,  // (n + l) / 4
    caro_trees,         // n / (k + 2)
    star_bound,         // (n + l) / (2k + 1)
    support_bound,      // (n - l + 2s) / 4
    boutrig,            // (n - l + s) / 3
    caro_third,         // n / 3
};
inline constexpr BoundKind kAllBounds[] = {
    BoundKind::order_minus_leaves, BoundKind::order_plus_leaves, BoundKind::caro_trees, BoundKind::star_bound,
    BoundKind::support_bound,      BoundKind::boutrig,           BoundKind::caro_third,
};
std::string_view to_string(BoundKind b);

Rational bound_value(BoundKind b, int n, int leaves, int supports, int k);

struct BoundEntry {
    BoundKind kind;
    Rational value;
    bool applicable = true;
    std::string reason; // why not applicable
    std::string note;   // informational remark on an applicable bound
    bool equality = false;
};

// The piecewise regimes of the combined tree bound, split at
// l = (k-1)n/(k+2) and l = kn/(k+2) (for k = 1 only the n/3 split exists).
enum class Regime {
    below_lower, // l < (k-1)n/(k+2)
    at_lower,    // l = (k-1)n/(k+2)
    between,     // strictly between
    at_upper,    // l = kn/(k+2)   (l = n/3 when k = 1)
    above_upper, // l > kn/(k+2)   (l > n/3 when k = 1)
    k1_below,    // k = 1: l < n/3
};
std::string regime_label(Regime r, int k);

Regime regime_classify(int n, int leaves, int k);

// The governing bound of the regime (the value iota_k must not exceed).
Rational regime_bound(Regime r, int n, int leaves, int k);

// Checks the stated relations of the regime row (e.g. (n+l)/4 < n/3 when
// l < n/3). Returns human-readable failures; empty when consistent.
std::vector<std::string> regime_relations_failures(Regime r, int n, int leaves, int k);

struct BoundReport {
    int n = 0;
    int leaves = 0;
    int supports = 0;
    int k = 1;
    int iota = 0;
    Regime regime = Regime::k1_below;
    bool regime_applicable = true;
    std::string regime_reason;
    std::vector<BoundEntry> bounds;

    const BoundEntry& at(BoundKind b) const;
    // Applicable bounds that iota exceeds; empty for every valid report.
    std::vector<BoundKind> violated() const;
};

// Evaluates every bound for (T, k) with iota from the tree DP (or the given
// value). Bounds whose hypotheses fail are kept as not-applicable entries.
BoundReport evaluate_bounds(const Tree& t, int k, std::optional<int> iota = std::nullopt);

nlohmann::json to_json(const BoundReport& r);

// (n + l)/4 - iota_1(T).
Rational gap_order_plus_leaves(const Tree& t);

} // namespace kiso
