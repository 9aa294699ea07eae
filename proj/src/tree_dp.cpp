// Rooted dynamic program for the k-isolation number of a tree.
//
// Every vertex v takes one of these states relative to D:
//   IN       v in D
//   SAT      v not in D, some child in D (so v in N[D] whatever the parent is)
//   NEED     v not in D, no child in D, parent must be in D
//   FREE(j)  v outside N[D], with j children also outside N[D]
// A FREE(j) vertex has residual degree j + [parent is FREE], which must stay
// below k. The root may not be NEED.

#include <algorithm>
#include <limits>
#include <string>

#include "kiso/errors.hpp"
#include "kiso/isolation.hpp"

namespace kiso {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int add(int a, int b) { return std::min(kInf, a + b); }

struct Costs {
    int in = kInf;
    int sat = kInf;
    int need = kInf;
    std::vector<int> free; // free[j], 0 <= j <= min(k-1, #children)

    int free_any() const { return free.empty() ? kInf : *std::min_element(free.begin(), free.end()); }
    // Cheapest FREE state that tolerates a FREE parent (j <= k-2).
    int free_under_free(int k) const {
        int best = kInf;
        for (int j = 0; j < static_cast<int>(free.size()) && j <= k - 2; ++j) best = std::min(best, free[j]);
        return best;
    }
    int under_in() const { return std::min({in, sat, need}); }
    int under_sat() const { return std::min({in, sat, free_any()}); }
    int under_need() const { return std::min(sat, free_any()); }
};

enum class State { in, sat, need, free };

struct Choice {
    State state = State::in;
    int j = 0;
};

class TreeDp {
public:
    TreeDp(const Tree& t, int k, Vertex root) : g_(t.graph()), k_(k), root_(root) {
        const int n = g_.order();
        parent_.assign(n, -1);
        children_.assign(n, {});
        order_.reserve(n);
        std::vector<Vertex> stack{root};
        parent_[root] = root;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            order_.push_back(v);
            for (Vertex u : g_.neighbors(v)) {
                if (parent_[u] != -1) continue;
                parent_[u] = v;
                children_[v].push_back(u);
                stack.push_back(u);
            }
        }
        costs_.resize(n);
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) compute(*it);
    }

    int optimum() const {
        const Costs& c = costs_[root_];
        return std::min({c.in, c.sat, c.free_any()});
    }

    VertexSet witness() const {
        const int n = g_.order();
        std::vector<Choice> choice(n);
        const Costs& rc = costs_[root_];
        const int best = optimum();
        if (rc.in == best) choice[root_] = {State::in, 0};
        else if (rc.sat == best) choice[root_] = {State::sat, 0};
        else choice[root_] = {State::free, best_free_index(rc.free, best)};

        VertexSet d;
        for (Vertex v : order_) {
            if (choice[v].state == State::in) d.push_back(v);
            assign_children(v, choice[v], choice);
        }
        std::sort(d.begin(), d.end());
        return d;
    }

private:
    static int best_free_index(const std::vector<int>& f, int value) {
        for (int j = 0; j < static_cast<int>(f.size()); ++j)
            if (f[j] == value) return j;
        return 0;
    }

    // Knapsack over children of v: table[i][j] = cheapest way for the first i
    // children to have exactly j FREE members (rest SAT), under a FREE parent.
    std::vector<std::vector<int>> free_table(Vertex v) const {
        const auto& kids = children_[v];
        const int jmax = std::min<int>(k_ - 1, static_cast<int>(kids.size()));
        std::vector<std::vector<int>> table(kids.size() + 1, std::vector<int>(jmax + 1, kInf));
        table[0][0] = 0;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const Costs& c = costs_[kids[i]];
            const int as_free = c.free_under_free(k_);
            for (int j = 0; j <= jmax; ++j) {
                int best = add(table[i][j], c.sat);
                if (j > 0) best = std::min(best, add(table[i][j - 1], as_free));
                table[i + 1][j] = best;
            }
        }
        return table;
    }

    void compute(Vertex v) {
        Costs& out = costs_[v];
        const auto& kids = children_[v];
        int in = 1, need = 0, sat_base = 0, sat_extra = kInf;
        for (Vertex c : kids) {
            const Costs& cc = costs_[c];
            in = add(in, cc.under_in());
            need = add(need, cc.under_need());
            const int b = cc.under_sat();
            sat_base = add(sat_base, b);
            if (cc.in < kInf) sat_extra = std::min(sat_extra, cc.in - b);
        }
        out.in = in;
        out.need = need;
        out.sat = (kids.empty() || sat_extra >= kInf) ? kInf : add(sat_base, sat_extra);
        out.free = free_table(v).back();
    }

    void assign_children(Vertex v, Choice mine, std::vector<Choice>& choice) const {
        const auto& kids = children_[v];
        if (kids.empty()) return;
        auto pick_free = [&](const Costs& c, int limit) {
            int bj = 0, bv = kInf;
            for (int j = 0; j < static_cast<int>(c.free.size()) && j <= limit; ++j)
                if (c.free[j] < bv) bv = c.free[j], bj = j;
            return Choice{State::free, bj};
        };
        switch (mine.state) {
        case State::in:
            for (Vertex c : kids) {
                const Costs& cc = costs_[c];
                const int b = cc.under_in();
                choice[c] = cc.in == b ? Choice{State::in, 0} : cc.sat == b ? Choice{State::sat, 0} : Choice{State::need, 0};
            }
            break;
        case State::need:
            for (Vertex c : kids) {
                const Costs& cc = costs_[c];
                choice[c] = cc.sat <= cc.free_any() ? Choice{State::sat, 0} : pick_free(cc, k_ - 1);
            }
            break;
        case State::sat: {
            bool has_in = false;
            Vertex swap = -1;
            int swap_gap = kInf;
            for (Vertex c : kids) {
                const Costs& cc = costs_[c];
                const int b = cc.under_sat();
                if (cc.in == b) {
                    choice[c] = {State::in, 0};
                    has_in = true;
                } else {
                    choice[c] = cc.sat == b ? Choice{State::sat, 0} : pick_free(cc, k_ - 1);
                    if (cc.in < kInf && cc.in - b < swap_gap) swap_gap = cc.in - b, swap = c;
                }
            }
            if (!has_in) choice[swap] = {State::in, 0};
            break;
        }
        case State::free: {
            auto table = free_table(v);
            int j = mine.j;
            for (std::size_t i = kids.size(); i-- > 0;) {
                const Costs& cc = costs_[kids[i]];
                const int target = table[i + 1][j];
                if (j > 0 && add(table[i][j - 1], cc.free_under_free(k_)) == target) {
                    choice[kids[i]] = pick_free(cc, k_ - 2);
                    --j;
                } else {
                    choice[kids[i]] = {State::sat, 0};
                }
            }
            break;
        }
        }
    }

    const Graph& g_;
    int k_;
    Vertex root_;
    std::vector<Vertex> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<Vertex> order_;
    std::vector<Costs> costs_;
};

} // namespace

IsolationSolution iota_tree_dp(const Tree& t, int k, Vertex root) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    if (root < 0 || root >= t.order()) throw PreconditionError("DP root out of range");
    TreeDp dp(t, k, root);
    IsolationSolution sol{k, dp.witness(), SolveMethod::tree_dp};
    return sol;
}

} // namespace kiso
