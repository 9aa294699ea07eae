#include "kiso/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "kiso/bounds.hpp"
#include "kiso/enumerate.hpp"
#include "kiso/errors.hpp"
#include "kiso/families.hpp"
#include "kiso/isolation.hpp"

namespace kiso {

namespace {

constexpr int kDefaultBruteForceMaxN = 12;
constexpr int kForcedBruteForceMaxN = 16;
constexpr int kAllRootsMaxN = 10;

constexpr Check kAllChecks[] = {Check::oracle,      Check::bounds,      Check::f_equality, Check::twin,
                                Check::tk_equality, Check::corollaries, Check::normalizers};

// FNV-1a, so per-tree random choices do not depend on the standard library.
std::uint64_t fnv1a(std::string_view s, std::uint64_t seed) {
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

class Checker {
public:
    Checker(const Tree& t, const SweepConfig& cfg, SweepRecord& rec)
        : t_(t), cfg_(cfg), rec_(rec), rng_(fnv1a(rec.tree_code, cfg.seed)) {}

    bool enabled(Check c) const { return std::find(cfg_.checks.begin(), cfg_.checks.end(), c) != cfg_.checks.end(); }

    void fail(Check c, int k, const std::string& msg) { rec_.violations.push_back({std::string(to_string(c)), k, msg}); }

    void expect(bool ok, Check c, int k, const std::string& msg) {
        if (!ok) fail(c, k, msg);
    }

    void run() {
        const int iota1 = iota_tree_dp(t_, 1).size();
        for (int k : cfg_.k_list) run_k(k, iota1);
    }

private:
    void run_k(int k, int iota1) {
        const int n = t_.order();
        const int l = t_.leaf_count();
        const Graph& g = t_.graph();
        const auto dp = iota_tree_dp(t_, k);
        const int iota = dp.size();
        nlohmann::json res;
        res["k"] = k;
        res["iota"] = iota;
        res["witness"] = dp.set;
        nlohmann::json fam = nlohmann::json::object();

        if (!is_isolating(g, dp.set, k)) fail(Check::oracle, k, "DP witness is not k-isolating");

        if (enabled(Check::oracle)) {
            const int bf_max = cfg_.force_bruteforce ? kForcedBruteForceMaxN : kDefaultBruteForceMaxN;
            if (n <= bf_max) {
                const int bf = iota_bruteforce(g, k).size();
                expect(bf == iota, Check::oracle, k,
                       "DP " + std::to_string(iota) + " != brute force " + std::to_string(bf));
            }
            std::vector<Vertex> roots;
            if (n <= kAllRootsMaxN) {
                for (Vertex v = 0; v < n; ++v) roots.push_back(v);
            } else {
                roots.push_back(std::uniform_int_distribution<Vertex>(0, n - 1)(rng_));
            }
            for (Vertex r : roots) {
                auto other = iota_tree_dp(t_, k, r);
                expect(other.size() == iota && is_isolating(g, other.set, k), Check::oracle, k,
                       "DP rooted at " + std::to_string(r) + " gives " + std::to_string(other.size()));
            }
        }

        const auto report = evaluate_bounds(t_, k, iota);
        res["bounds"] = to_json(report);

        if (enabled(Check::bounds)) {
            for (BoundKind b : report.violated())
                fail(Check::bounds, k,
                     std::string(to_string(b)) + " violated: iota " + std::to_string(iota) + " > " +
                         to_string(report.at(b).value));
            if (report.regime_applicable) {
                const Rational rb = regime_bound(report.regime, n, l, k);
                expect(Rational(iota) <= rb, Check::bounds, k,
                       "regime " + regime_label(report.regime, k) + " bound " + to_string(rb) + " exceeded");
                for (const auto& f : regime_relations_failures(report.regime, n, l, k))
                    fail(Check::bounds, k, "regime relation fails: " + f);
            }
            if (k == 1 && report.at(BoundKind::support_bound).applicable) {
                const Rational sb = report.at(BoundKind::support_bound).value;
                const Rational pb = report.at(BoundKind::order_plus_leaves).value;
                expect(sb <= pb, Check::bounds, k, "support bound above (n+l)/4");
                expect((sb == pb) == t_.strong_supports().empty(), Check::bounds, k,
                       "support bound equals (n+l)/4 iff no strong support fails");
            }
            expect(iota <= iota1, Check::bounds, k, "iota_k > iota_1");
            expect((iota == 0) == (t_.max_degree() < k), Check::bounds, k, "iota_k = 0 iff max degree < k fails");
            if (n >= 2) expect(diameter(t_) > 4 || iota <= 1, Check::bounds, k, "diam <= 4 but iota_k > 1");
        }

        if (k == 1 && (enabled(Check::f_equality) || enabled(Check::twin))) check_f(iota, fam);
        if (k >= 2 && (enabled(Check::tk_equality) || enabled(Check::corollaries))) check_tk(k, iota, fam);
        if (enabled(Check::normalizers)) check_normalizers(k, dp);

        if (enabled(Check::corona_char) && n >= 3) {
            const bool eq = 2 * iota == n - l;
            const bool member = recognize_char_orderminusleaves(g, k).has_value();
            fam["corona_char"] = member;
            expect(eq == member, Check::corona_char, k,
                   std::string("iota_k = (n-l)/2 is ") + (eq ? "true" : "false") + " but C4/corona recognition says " +
                       (member ? "member" : "non-member"));
        }
        res["families"] = fam;
        rec_.results.push_back(std::move(res));
    }

    void check_f(int iota, nlohmann::json& fam) {
        const int n = t_.order();
        const int l = t_.leaf_count();
        const bool eq = 4 * iota == n + l;
        const auto cert = recognize_F(t_);
        fam["F"] = cert.has_value();
        if (enabled(Check::f_equality)) {
            if (n >= 6) {
                expect(eq == cert.has_value(), Check::f_equality, 1,
                       std::string("(n+l)/4 equality is ") + (eq ? "true" : "false") + " but recognize_F says " +
                           (cert ? "member" : "non-member"));
            } else if (n == 2) {
                expect(eq, Check::f_equality, 1, "K2 must attain (n+l)/4");
            } else {
                expect(!eq, Check::f_equality, 1, "no tree of order 1, 3, 4, 5 attains (n+l)/4");
            }
            if (cert) {
                VertexSet roots = {cert->A.front()};
                VertexSet ax = cert->A;
                ax.insert(ax.end(), cert->X.begin(), cert->X.end());
                roots.push_back(ax[std::uniform_int_distribution<std::size_t>(0, ax.size() - 1)(rng_)]);
                for (Vertex r : roots) {
                    auto d = min_iso_set_F(t_, *cert, r);
                    expect(d.size() == iota && is_isolating(t_.graph(), d.set, 1), Check::f_equality, 1,
                           "constructive F set from root " + std::to_string(r) + " is not a minimum isolating set");
                }
            }
            if (!t_.strong_supports().empty()) expect(!eq, Check::f_equality, 1, "strong support yet equality");
            if (n >= 2) {
                const int d = diameter(t_);
                if (d >= 2 && d <= 3)
                    expect(iota == 1 && !eq, Check::f_equality, 1, "diameter 2-3 needs iota = 1 < (n+l)/4");
            }
        }
        // n >= 3 as for the bound itself; K2 has s = 2 and attains it trivially.
        if (enabled(Check::twin) && n >= 3 && t_.support_count() >= 2) {
            const int s = t_.support_count();
            const bool seq = 4 * iota == n - l + 2 * s;
            const bool member = recognize_F(strip_twin_leaves(t_)).has_value();
            expect(seq == member, Check::twin, 1,
                   std::string("(n-l+2s)/4 equality is ") + (seq ? "true" : "false") +
                       " but the stripped tree is " + (member ? "in F" : "not in F"));
        }
    }

    void check_tk(int k, int iota, nlohmann::json& fam) {
        const int n = t_.order();
        const int l = t_.leaf_count();
        const bool eq = (2 * k + 1) * iota == n + l;
        const bool star = is_star(t_, k);
        const auto cert = recognize_Tk(t_, k);
        fam["Tk"] = cert.has_value();
        if (enabled(Check::tk_equality)) {
            expect(eq == (star || cert.has_value()), Check::tk_equality, k,
                   std::string("(n+l)/(2k+1) equality is ") + (eq ? "true" : "false") + " but star/T_k says " +
                       ((star || cert) ? "member" : "non-member"));
            if (cert) {
                auto d = min_iso_set_Tk(t_, *cert, k);
                expect(d.size() == iota && d.size() == static_cast<int>(cert->C.size()) &&
                           is_isolating(t_.graph(), d.set, k),
                       Check::tk_equality, k, "constructive T_k set is not a minimum k-isolating set of size |C|");
            }
            if (n >= 3 && t_.max_degree() >= k && n < 2 * k + 4 && n + l > 2 * k + 1)
                expect(!eq, Check::tk_equality, k, "equality below order 2k+4 outside K_{1,k}");
        }
        if (enabled(Check::corollaries) && t_.max_degree() >= k) {
            expect(n + l >= 2 * k + 1, Check::corollaries, k, "n + l < 2k + 1 although max degree >= k");
            int big = 0;
            for (Vertex v = 0; v < n; ++v) big += t_.degree(v) >= k;
            if (n >= 2) expect(l >= 2 + big * (k - 2), Check::corollaries, k, "l < 2 + n_{>=k}(k-2)");
            if (n >= 3 && n <= 2 * k + 1) expect(iota == 1, Check::corollaries, k, "n <= 2k+1 but iota_k != 1");
            if (n >= 3) expect((n + l == 2 * k + 1) == star, Check::corollaries, k, "n + l = 2k+1 iff K_{1,k} fails");
            if (n >= 3 && n <= 2 * k + 3) expect(eq == star, Check::corollaries, k, "small-order equality iff K_{1,k} fails");
            if (eq && !star) {
                const auto path = diameter_path(t_, true);
                expect(path.length() >= 5, Check::corollaries, k, "equality with diameter < 5");
                expect(t_.degree(path.vertices[1]) == k, Check::corollaries, k,
                       "equality but deg(u_1) != k on a diametral path maximizing it");
            }
        }
    }

    void check_normalizers(int k, const IsolationSolution& dp) {
        const int n = t_.order();
        if (n < 3) return;
        const Graph& g = t_.graph();
        auto a = normalize_no_leaves(g, dp);
        expect(a.size() == dp.size() && is_isolating(g, a.set, k), Check::normalizers, k,
               "leaf replacement changed size or lost isolation");
        for (Vertex v : a.set) expect(!t_.is_leaf(v), Check::normalizers, k, "leaf left in normalized set");
        if (k != 1 || n < 5) return;
        auto b = normalize_no_deg2_support(t_, a);
        expect(b.size() == dp.size() && is_isolating(g, b.set, 1), Check::normalizers, k,
               "degree-2 support replacement changed size or lost isolation");
        for (Vertex v : b.set)
            expect(!(t_.degree(v) == 2 && t_.is_support(v)) && !t_.is_leaf(v), Check::normalizers, k,
                   "degree-2 support or leaf left in normalized set");
    }

    const Tree& t_;
    const SweepConfig& cfg_;
    SweepRecord& rec_;
    std::mt19937_64 rng_;
};

} // namespace

std::string_view to_string(Check c) {
    switch (c) {
    case Check::oracle: return "oracle";
    case Check::bounds: return "bounds";
    case Check::f_equality: return "F-equality";
    case Check::twin: return "twin";
    case Check::tk_equality: return "Tk-equality";
    case Check::corollaries: return "corollaries";
    case Check::normalizers: return "normalizers";
    case Check::corona_char: return "corona-char";
    }
    return "?";
}

std::vector<Check> parse_checks(std::string_view text) {
    std::vector<Check> out;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "all") {
            out.insert(out.end(), std::begin(kAllChecks), std::end(kAllChecks));
            continue;
        }
        bool found = false;
        for (Check c : {Check::oracle, Check::bounds, Check::f_equality, Check::twin, Check::tk_equality,
                        Check::corollaries, Check::normalizers, Check::corona_char})
            if (item == to_string(c)) out.push_back(c), found = true;
        if (!found) throw PreconditionError("unknown check suite '" + item + "'");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void validate(const SweepConfig& cfg) {
    if (cfg.k_list.empty()) throw PreconditionError("k list must be nonempty");
    for (int k : cfg.k_list)
        if (k < 1) throw PreconditionError("every k must be >= 1");
    if (cfg.min_n < 1 || cfg.max_n > kMaxEnumerationOrder || cfg.min_n > cfg.max_n)
        throw PreconditionError("orders must satisfy 1 <= min_n <= max_n <= " + std::to_string(kMaxEnumerationOrder));
    if (cfg.force_bruteforce && cfg.max_n > kForcedBruteForceMaxN)
        throw PreconditionError("forced brute force needs max_n <= " + std::to_string(kForcedBruteForceMaxN));
    if (cfg.jobs < 1) throw PreconditionError("jobs must be >= 1");
}

SweepRecord sweep_tree(const Tree& t, const SweepConfig& cfg) {
    SweepRecord rec;
    rec.tree_code = canonical_code(t);
    rec.n = t.order();
    rec.leaves = t.leaf_count();
    rec.supports = t.support_count();
    rec.diam = t.order() >= 2 ? diameter(t) : 0;
    Checker(t, cfg, rec).run();
    return rec;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    std::vector<Tree> trees;
    for (int n = cfg.min_n; n <= cfg.max_n; ++n)
        for_each_free_tree(n, [&](const Tree& t) { trees.push_back(t); });

    SweepResult out;
    out.records.resize(trees.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < trees.size(); i = next++) out.records[i] = sweep_tree(trees[i], cfg);
    };
    const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(trees.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::sort(out.records.begin(), out.records.end(),
              [](const SweepRecord& a, const SweepRecord& b) { return a.tree_code < b.tree_code; });
    for (const auto& r : out.records) out.violation_count += static_cast<int>(r.violations.size());
    return out;
}

nlohmann::json to_json(const SweepRecord& r) {
    nlohmann::json j;
    j["tree_code"] = r.tree_code;
    j["n"] = r.n;
    j["l"] = r.leaves;
    j["s"] = r.supports;
    j["diam"] = r.diam;
    j["results"] = r.results;
    auto& v = j["violations"] = nlohmann::json::array();
    for (const auto& x : r.violations) v.push_back({{"check", x.check}, {"k", x.k}, {"message", x.message}});
    return j;
}

} // namespace kiso
