// Independent reference implementations used only by the tests. Nothing here
// calls into the library apart from the Graph accessors, so a bug in a solver
// or recognizer cannot hide behind the oracle that checks it.
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "kiso/graph.hpp"

namespace oracle {

using kiso::Graph;
using Adj = std::vector<std::vector<int>>;

inline Adj adjacency(const Graph& g) {
    Adj a(g.order());
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v)) a[v].push_back(u);
    return a;
}

// Residual max degree after removing N[D], D given as a bitmask.
inline int residual_max_degree(const Adj& a, unsigned mask) {
    const int n = static_cast<int>(a.size());
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) {
            gone[v] = true;
            for (int u : a[v]) gone[u] = true;
        }
    int best = 0;
    for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        int d = 0;
        for (int u : a[v]) d += !gone[u];
        best = std::max(best, d);
    }
    return best;
}

// iota_k by scanning every subset (no size ordering tricks).
inline int iota(const Graph& g, int k) {
    const Adj a = adjacency(g);
    const unsigned limit = 1u << g.order();
    int best = g.order();
    for (unsigned mask = 0; mask < limit; ++mask) {
        const int size = __builtin_popcount(mask);
        if (size < best && residual_max_degree(a, mask) < k) best = size;
    }
    return best;
}

// gamma as isolation of K1: the residual must have no vertex at all.
inline int gamma(const Graph& g) {
    const Adj a = adjacency(g);
    const int n = g.order();
    int best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> dom(n, false);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) {
                dom[v] = true;
                for (int u : a[v]) dom[u] = true;
            }
        if (std::all_of(dom.begin(), dom.end(), [](bool b) { return b; }))
            best = std::min(best, __builtin_popcount(mask));
    }
    return best;
}

// Rooted canonical string, minimized over every vertex as root. Slower than
// a center-rooted code but shares nothing with it.
inline std::string rooted(const Adj& a, int v, int parent) {
    std::vector<std::string> kids;
    for (int u : a[v])
        if (u != parent) kids.push_back(rooted(a, u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "[";
    for (auto& k : kids) s += k;
    return s + "]";
}

inline std::string iso_key(const Graph& g) {
    const Adj a = adjacency(g);
    std::string best;
    for (int v = 0; v < g.order(); ++v) {
        auto s = rooted(a, v, -1);
        if (v == 0 || s < best) best = s;
    }
    return best;
}

// Labeled tree from a Prufer sequence by the quadratic textbook method.
inline std::vector<std::pair<int, int>> prufer_edges(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (deg[leaf] == 1) {
                edges.push_back({leaf, x});
                --deg[leaf];
                --deg[x];
                break;
            }
    }
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) {
            if (u < 0) u = v;
            else edges.push_back({u, v});
        }
    return edges;
}

// Every Prufer sequence of length n-2, fed to fn.
inline void for_each_prufer(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> seq(std::max(0, n - 2), 0);
    for (;;) {
        fn(seq);
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) return;
        ++seq[i];
    }
}

// Free trees of order n up to isomorphism via all labeled trees.
inline std::set<std::string> free_tree_keys(int n) {
    std::set<std::string> keys;
    if (n == 1) {
        keys.insert("[]");
        return keys;
    }
    for_each_prufer(n, [&](const std::vector<int>& seq) {
        keys.insert(iso_key(kiso::build_graph(n, prufer_edges(seq))));
    });
    return keys;
}

// Rebuilds a tree from a rooted key "[...]" as an edge list.
inline std::vector<std::pair<int, int>> edges_from_key(const std::string& key, int& order) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> stack;
    order = 0;
    for (char ch : key) {
        if (ch == '[') {
            if (!stack.empty()) edges.push_back({stack.back(), order});
            stack.push_back(order++);
        } else {
            stack.pop_back();
        }
    }
    return edges;
}

// Every tree of order n+1 arises from one of order n by adding a leaf, so
// the classes of order n+1 follow from those of order n.
inline std::set<std::string> extend_by_leaf(const std::set<std::string>& smaller) {
    std::set<std::string> keys;
    for (const auto& key : smaller) {
        int n = 0;
        auto edges = edges_from_key(key, n);
        for (int v = 0; v < n; ++v) {
            auto e = edges;
            e.push_back({v, n});
            keys.insert(iso_key(kiso::build_graph(n + 1, e)));
        }
    }
    return keys;
}

// Membership in F straight from the definition: split V into vertex-disjoint
// paths a-b-c and x-y-y'-x' (at least two of the first kind) so that every
// other edge joins two vertices of A u X and no A u X vertex is a leaf.
inline bool in_family_F(const Graph& g) {
    const int n = g.order();
    const Adj a = adjacency(g);
    enum { none, A, B, C, X, Y };
    std::vector<int> lab(n, none), copy(n, -1);
    int copies = 0, p3 = 0;

    auto final_check = [&]() {
        if (p3 < 2) return false;
        for (int v = 0; v < n; ++v) {
            if ((lab[v] == A || lab[v] == X) && a[v].size() == 1) return false;
            for (int u : a[v]) {
                if (copy[u] == copy[v]) continue;
                bool ok = (lab[u] == A || lab[u] == X) && (lab[v] == A || lab[v] == X);
                if (!ok) return false;
            }
        }
        return true;
    };
    // Path copies are induced paths in a tree, so only the internal copy
    // edges need to be present; any further edge is judged by final_check.
    std::function<bool()> rec = [&]() -> bool {
        int v = 0;
        while (v < n && lab[v] != none) ++v;
        if (v == n) return final_check();
        // every path of 3 or 4 unassigned vertices through v, both orientations
        std::vector<std::vector<int>> all;
        for (int s = 0; s < n; ++s) {
            if (lab[s] != none) continue;
            std::vector<int> p{s};
            std::function<void(std::vector<int>&)> g2 = [&](std::vector<int>& q) {
                if (q.size() >= 3 && std::find(q.begin(), q.end(), v) != q.end()) all.push_back(q);
                if (q.size() == 4) return;
                for (int u : a[q.back()])
                    if (lab[u] == none && std::find(q.begin(), q.end(), u) == q.end()) {
                        q.push_back(u);
                        g2(q);
                        q.pop_back();
                    }
            };
            g2(p);
        }
        for (const auto& p : all) {
            const int id = copies++;
            if (p.size() == 3) {
                lab[p[0]] = A, lab[p[1]] = B, lab[p[2]] = C;
                ++p3;
            } else {
                lab[p[0]] = X, lab[p[1]] = Y, lab[p[2]] = Y, lab[p[3]] = X;
            }
            for (int u : p) copy[u] = id;
            if (rec()) return true;
            for (int u : p) lab[u] = none, copy[u] = -1;
            if (p.size() == 3) --p3;
            --copies;
        }
        return false;
    };
    return rec();
}

// Membership in T_k from the definition, by trying every labeling that the
// degrees allow (leaves are L; A, B, C need degree >= 2, 2, k).
inline bool in_family_Tk(const Graph& g, int k) {
    const int n = g.order();
    const Adj a = adjacency(g);
    enum { A, B, C, L };
    std::vector<std::vector<int>> dom(n);
    for (int v = 0; v < n; ++v) {
        const int d = static_cast<int>(a[v].size());
        if (d == 1) {
            dom[v] = {L};
            continue;
        }
        dom[v].push_back(A);
        if (d == 2) dom[v].push_back(B);
        if (d == k) dom[v].push_back(C);
    }
    std::vector<int> lab(n);
    auto check = [&]() {
        int na = 0;
        for (int v = 0; v < n; ++v) {
            int ca = 0, cb = 0, cc = 0, cl = 0;
            for (int u : a[v]) {
                ca += lab[u] == A;
                cb += lab[u] == B;
                cc += lab[u] == C;
                cl += lab[u] == L;
            }
            const int d = static_cast<int>(a[v].size());
            switch (lab[v]) {
            case A:
                ++na;
                // A u B is A with one pendant B per A vertex; A components
                // are nontrivial; C and L never touch A.
                if (cb != 1 || ca < 1 || cc + cl > 0) return false;
                break;
            case B:
                if (d != 2 || ca != 1 || cc != 1) return false;
                break;
            case C:
                if (d != k || ca + cc > 0 || cb < 1) return false;
                break;
            case L:
                if (d != 1) return false;
                break;
            }
        }
        if (na == 0) return false;
        // A u B u C must induce a tree: in a tree, connected suffices.
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (lab[v] != L) keep.push_back(v);
        std::vector<bool> seen(n, false);
        std::vector<int> stack{keep.front()};
        seen[keep.front()] = true;
        int count = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int u : a[v])
                if (!seen[u] && lab[u] != L) seen[u] = true, stack.push_back(u);
        }
        return count == static_cast<int>(keep.size());
    };
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) return check();
        for (int l : dom[v]) {
            lab[v] = l;
            if (rec(v + 1)) return true;
        }
        return false;
    };
    return k >= 2 && n > 0 && rec(0);
}

} // namespace oracle
