#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "kiso/errors.hpp"
#include "kiso/families.hpp"

namespace kiso {

namespace {

enum Label { lab_a = 0, lab_b = 1, lab_c = 2, lab_l = 3, lab_none = 4 };

// Components of the subgraph induced on `part`, as sorted original indices.
std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& part) {
    Graph f = induced_subgraph(g, part);
    std::vector<bool> done(f.order(), false);
    std::vector<VertexSet> comps;
    for (Vertex s = 0; s < f.order(); ++s) {
        if (done[s]) continue;
        auto d = bfs_distances(f, s);
        VertexSet comp;
        for (Vertex v = 0; v < f.order(); ++v)
            if (d[v] >= 0) done[v] = true, comp.push_back(part[v]);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

// Neighbour label counts, each capped at 2, packed base 3.
using Counts = int;
constexpr int kCountStates = 81;

int count_of(Counts c, int label) {
    for (int i = 0; i < label; ++i) c /= 3;
    return c % 3;
}

Counts bump(Counts c, int label) {
    if (label == lab_none) return c;
    int p = 1;
    for (int i = 0; i < label; ++i) p *= 3;
    return count_of(c, label) == 2 ? c : c + p;
}

bool local_ok(int label, Counts c, int degree, int k) {
    const int na = count_of(c, lab_a), nb = count_of(c, lab_b), nc = count_of(c, lab_c), nl = count_of(c, lab_l);
    switch (label) {
    case lab_a: return nb == 1 && na >= 1 && nc == 0 && nl == 0;
    case lab_b: return degree == 2 && na == 1 && nc == 1;
    case lab_c: return degree == k && na == 0 && nc == 0 && nb >= 1;
    case lab_l: return degree == 1 && nc == 1;
    }
    return false;
}

std::vector<int> labels_from(int n, const TkCertificate& cert) {
    std::vector<int> lab(n, lab_none);
    auto mark = [&](const VertexSet& s, int l) {
        for (Vertex v : s)
            if (v >= 0 && v < n) lab[v] = l;
    };
    mark(cert.A, lab_a);
    mark(cert.B, lab_b);
    mark(cert.C, lab_c);
    mark(cert.L, lab_l);
    return lab;
}

TkCertificate certificate_from_labels(const Graph& g, const std::vector<int>& lab) {
    TkCertificate cert;
    for (Vertex v = 0; v < g.order(); ++v) {
        switch (lab[v]) {
        case lab_a: cert.A.push_back(v); break;
        case lab_b: cert.B.push_back(v); break;
        case lab_c: cert.C.push_back(v); break;
        default: cert.L.push_back(v); break;
        }
    }
    cert.n0 = static_cast<int>(cert.A.size());
    cert.h = static_cast<int>(induced_components(g, cert.A).size());
    return cert;
}

} // namespace

std::vector<std::string> validate(const Tree& t, const TkCertificate& cert, int k) {
    std::vector<std::string> err;
    const int n = t.order();
    const Graph& g = t.graph();
    if (k < 2) {
        err.push_back("k must be >= 2");
        return err;
    }
    std::vector<int> seen(n, 0);
    for (const VertexSet* s : {&cert.A, &cert.B, &cert.C, &cert.L})
        for (Vertex v : *s) {
            if (v < 0 || v >= n) {
                err.push_back("vertex " + std::to_string(v) + " out of range");
                return err;
            }
            ++seen[v];
        }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
        err.push_back("A, B, C, L do not partition V");
        return err;
    }
    const auto lab = labels_from(n, cert);
    VertexSet l_sorted = cert.L;
    std::sort(l_sorted.begin(), l_sorted.end());
    if (l_sorted != t.leaves()) err.push_back("L is not the set of leaves");

    static const char* names[] = {"A", "B", "C", "L"};
    static const char* clause[] = {
        "A vertex needs exactly one B neighbour, >= 1 A neighbour, nothing else",
        "B vertex needs degree 2 with one A and one C neighbour",
        "C vertex needs degree k, neighbours in B u L, >= 1 in B",
        "L vertex must hang from a C vertex",
    };
    for (Vertex v = 0; v < n; ++v) {
        Counts c = 0;
        for (Vertex u : g.neighbors(v)) c = bump(c, lab[u]);
        if (!local_ok(lab[v], c, g.degree(v), k))
            err.push_back(std::string(clause[lab[v]]) + " (" + names[lab[v]] + " vertex " + std::to_string(v) + ")");
    }

    const auto comps = induced_components(g, cert.A);
    const int n0 = static_cast<int>(cert.A.size());
    const int h = static_cast<int>(comps.size());
    for (const auto& comp : comps)
        if (comp.size() < 2) err.push_back("A component {" + std::to_string(comp.front()) + "} is trivial");
    if (h < 1) err.push_back("A is empty");
    if (cert.h != h) err.push_back("h does not match the components of A");
    if (cert.n0 != n0) err.push_back("n0 does not match |A|");

    VertexSet abc = cert.A;
    abc.insert(abc.end(), cert.B.begin(), cert.B.end());
    abc.insert(abc.end(), cert.C.begin(), cert.C.end());
    if (!is_connected(induced_subgraph(g, abc))) err.push_back("A u B u C does not induce a tree");

    if (static_cast<int>(cert.B.size()) != n0) err.push_back("|B| != n0");
    if (static_cast<int>(cert.C.size()) != n0 - (h - 1)) err.push_back("|C| != n0 - (h - 1)");
    if (static_cast<int>(cert.L.size()) != (k - 1) * n0 - k * (h - 1)) err.push_back("|L| != (k-1)n0 - k(h-1)");
    if (n != (k + 2) * n0 - (k + 1) * (h - 1)) err.push_back("n != (k+2)n0 - (k+1)(h-1)");
    if (n < 2 * k + 4) err.push_back("n < 2k + 4");

    for (Vertex c : cert.C) {
        auto d = bfs_distances(g, c);
        for (Vertex c2 : cert.C)
            if (c2 != c && d[c2] < 5) {
                err.push_back("C vertices " + std::to_string(c) + " and " + std::to_string(c2) + " at distance " +
                              std::to_string(d[c2]) + " < 5");
                return err;
            }
    }
    return err;
}

FamilyInstance<TkCertificate> gen_family_Tk(int k, const TkWiring& w) {
    if (k < 2) throw FamilyError("k must be >= 2");
    const int n0 = w.n0;
    if (n0 < 2) throw FamilyError("n0 must be >= 2");
    std::vector<int> forest_degree(n0, 0);
    for (auto [u, v] : w.a_forest) {
        if (u < 0 || v < 0 || u >= n0 || v >= n0)
            throw FamilyError("A-forest edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
        ++forest_degree[u];
        ++forest_degree[v];
    }
    for (int i = 0; i < n0; ++i)
        if (forest_degree[i] == 0)
            throw FamilyError("A components must be nontrivial: a_" + std::to_string(i) + " is isolated");

    std::vector<int> group_of(n0, -1);
    for (int j = 0; j < static_cast<int>(w.c_groups.size()); ++j) {
        const auto& grp = w.c_groups[j];
        if (grp.empty() || static_cast<int>(grp.size()) > k)
            throw FamilyError("C vertex " + std::to_string(j) + " must receive between 1 and k B neighbours");
        for (int i : grp) {
            if (i < 0 || i >= n0) throw FamilyError("c_wiring names unknown A index " + std::to_string(i));
            if (group_of[i] != -1) throw FamilyError("B vertex of a_" + std::to_string(i) + " assigned twice");
            group_of[i] = j;
        }
    }
    for (int i = 0; i < n0; ++i)
        if (group_of[i] == -1) throw FamilyError("B vertex of a_" + std::to_string(i) + " has no C vertex");

    const int nc = static_cast<int>(w.c_groups.size());
    std::vector<Edge> edges = w.a_forest;
    for (int i = 0; i < n0; ++i) {
        edges.push_back({i, n0 + i});
        edges.push_back({n0 + i, 2 * n0 + group_of[i]});
    }
    int next = 2 * n0 + nc;
    for (int j = 0; j < nc; ++j)
        for (int c = static_cast<int>(w.c_groups[j].size()); c < k; ++c) edges.push_back({2 * n0 + j, next++});
    const int n = next;
    if (static_cast<int>(edges.size()) != n - 1) throw FamilyError("A u B u C wiring does not form a tree");
    Graph g;
    try {
        g = build_graph(n, edges);
    } catch (const GraphError& e) {
        throw FamilyError(std::string("invalid wiring: ") + e.what());
    }
    if (!is_connected(g)) throw FamilyError("A u B u C wiring does not form a tree");

    std::vector<int> lab(n, lab_l);
    for (int i = 0; i < n0; ++i) lab[i] = lab_a, lab[n0 + i] = lab_b;
    for (int j = 0; j < nc; ++j) lab[2 * n0 + j] = lab_c;
    FamilyInstance<TkCertificate> inst{as_tree(g), certificate_from_labels(g, lab)};
    auto errors = validate(inst.tree, inst.cert, k);
    if (!errors.empty()) throw FamilyError(errors.front());
    return inst;
}

TkWiring random_Tk_wiring(int k, int n0, int h, std::uint64_t seed) {
    if (k < 2) throw FamilyError("k must be >= 2");
    if (h < 1) throw FamilyError("h must be >= 1");
    if (n0 < 2 * h) throw FamilyError("n0 >= 2h is needed for h nontrivial components");
    std::mt19937_64 rng(seed);
    constexpr int kAttempts = 1000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        TkWiring w;
        w.n0 = n0;
        std::vector<int> perm(n0);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> sizes(h, 2);
        std::uniform_int_distribution<int> pick_comp(0, h - 1);
        for (int extra = n0 - 2 * h; extra > 0; --extra) ++sizes[pick_comp(rng)];

        std::vector<int> comp_of(n0);
        int offset = 0;
        for (int c = 0; c < h; ++c) {
            const int m = sizes[c];
            std::vector<int> seq(m - 2);
            std::uniform_int_distribution<int> any(0, m - 1);
            for (int& x : seq) x = any(rng);
            Tree part = prufer_decode(seq);
            for (auto [u, v] : part.graph().edges()) w.a_forest.push_back({perm[offset + u], perm[offset + v]});
            for (int i = 0; i < m; ++i) comp_of[perm[offset + i]] = c;
            offset += m;
        }

        // Union-find over A components; each merge of two C vertices from
        // different components joins them.
        std::vector<int> uf(h);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        std::vector<std::vector<int>> groups;
        std::vector<int> group_comp;
        for (int i = 0; i < n0; ++i) {
            groups.push_back({i});
            group_comp.push_back(comp_of[i]);
        }
        bool ok = true;
        for (int merge = 0; merge < h - 1; ++merge) {
            std::vector<std::pair<int, int>> cand;
            for (int a = 0; a < static_cast<int>(groups.size()); ++a)
                for (int b = a + 1; b < static_cast<int>(groups.size()); ++b)
                    if (find(group_comp[a]) != find(group_comp[b]) &&
                        static_cast<int>(groups[a].size() + groups[b].size()) <= k)
                        cand.push_back({a, b});
            if (cand.empty()) {
                ok = false;
                break;
            }
            auto [a, b] = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
            uf[find(group_comp[b])] = find(group_comp[a]);
            groups[a].insert(groups[a].end(), groups[b].begin(), groups[b].end());
            groups.erase(groups.begin() + b);
            group_comp.erase(group_comp.begin() + b);
        }
        if (!ok) continue;
        for (auto& g : groups) std::sort(g.begin(), g.end());
        w.c_groups = std::move(groups);
        return w;
    }
    throw FamilyError("no T_k wiring found within the retry budget");
}

std::optional<TkCertificate> recognize_Tk(const Tree& t, int k) {
    if (k < 2) throw PreconditionError("recognize_Tk needs k >= 2");
    const int n = t.order();
    if (n < 2 * k + 4) return std::nullopt;
    const Graph& g = t.graph();

    std::vector<Vertex> parent(n, -1), order;
    std::vector<std::vector<Vertex>> children(n);
    order.reserve(n);
    std::vector<Vertex> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Vertex u : g.neighbors(v))
            if (parent[u] == -1) parent[u] = v, children[v].push_back(u), stack.push_back(u);
    }

    // feasible[v][lv][lp]: subtree of v can be labeled with v = lv under a
    // parent labeled lp. layers[v][lv][i] = reachable neighbour-count states
    // after the first i children.
    using Layer = std::array<bool, kCountStates>;
    std::vector<std::array<std::array<bool, 5>, 4>> feasible(n);
    std::vector<std::array<std::vector<Layer>, 4>> layers(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        for (int lv = 0; lv < 4; ++lv) {
            auto& ls = layers[v][lv];
            ls.assign(children[v].size() + 1, Layer{});
            ls[0][0] = true;
            for (std::size_t i = 0; i < children[v].size(); ++i) {
                const Vertex c = children[v][i];
                for (Counts s = 0; s < kCountStates; ++s) {
                    if (!ls[i][s]) continue;
                    for (int lc = 0; lc < 4; ++lc)
                        if (feasible[c][lc][lv]) ls[i + 1][bump(s, lc)] = true;
                }
            }
            for (int lp = 0; lp < 5; ++lp) {
                bool ok = false;
                for (Counts s = 0; s < kCountStates && !ok; ++s)
                    ok = ls.back()[s] && local_ok(lv, bump(s, lp), g.degree(v), k);
                feasible[v][lv][lp] = ok;
            }
        }
    }

    std::vector<int> lab(n, lab_none);
    for (int lv = 0; lv < 4 && lab[0] == lab_none; ++lv)
        if (feasible[0][lv][lab_none]) lab[0] = lv;
    if (lab[0] == lab_none) return std::nullopt;

    for (Vertex v : order) {
        const int lv = lab[v];
        const int lp = v == 0 ? lab_none : lab[parent[v]];
        const auto& ls = layers[v][lv];
        Counts s = -1;
        for (Counts c = 0; c < kCountStates && s < 0; ++c)
            if (ls.back()[c] && local_ok(lv, bump(c, lp), g.degree(v), k)) s = c;
        for (std::size_t i = children[v].size(); i-- > 0;) {
            const Vertex c = children[v][i];
            bool placed = false;
            for (int lc = 0; lc < 4 && !placed; ++lc) {
                if (!feasible[c][lc][lv]) continue;
                for (Counts prev = 0; prev < kCountStates; ++prev)
                    if (ls[i][prev] && bump(prev, lc) == s) {
                        lab[c] = lc;
                        s = prev;
                        placed = true;
                        break;
                    }
            }
            if (!placed) return std::nullopt; // unreachable for a consistent table
        }
    }
    TkCertificate cert = certificate_from_labels(g, lab);
    if (!validate(t, cert, k).empty()) return std::nullopt;
    return cert;
}

IsolationSolution min_iso_set_Tk(const Tree& t, const TkCertificate& cert, int k) {
    const Graph& g = t.graph();
    const auto comps = induced_components(g, cert.A);
    if (comps.empty()) throw FamilyError("certificate has no A vertices");
    std::vector<int> comp_of(t.order(), -1);
    for (int i = 0; i < static_cast<int>(comps.size()); ++i)
        for (Vertex v : comps[i]) comp_of[v] = i;

    // comps is sorted, so comps[0] holds the smallest A vertex.
    VertexSet d = comps[0];
    VertexSet w = comps[0];
    std::vector<bool> in_w(t.order(), false);
    for (Vertex v : w) in_w[v] = true;
    while (w.size() < cert.A.size()) {
        auto dist = bfs_distances(g, w);
        VertexSet x;
        for (Vertex u : cert.A)
            if (!in_w[u] && dist[u] == 4) x.push_back(u);
        if (x.empty()) throw FamilyError("T_k procedure stalled: no A vertex at distance 4 from W");
        std::vector<bool> in_x(t.order(), false);
        for (Vertex u : x) in_x[u] = true;
        std::vector<bool> taken(comps.size(), false);
        for (Vertex u : x) {
            const int c = comp_of[u];
            if (taken[c]) continue;
            taken[c] = true;
            for (Vertex v : comps[c]) {
                if (!in_x[v]) d.push_back(v);
                w.push_back(v);
                in_w[v] = true;
            }
        }
    }
    std::sort(d.begin(), d.end());
    return {k, std::move(d), SolveMethod::family_construction};
}

nlohmann::json to_json(const TkCertificate& c) {
    nlohmann::json j;
    j["family"] = "Tk";
    j["A"] = c.A;
    j["B"] = c.B;
    j["C"] = c.C;
    j["L"] = c.L;
    j["h"] = c.h;
    j["n0"] = c.n0;
    return j;
}

} // namespace kiso
