#include <algorithm>

#include "kiso/errors.hpp"
#include "kiso/families.hpp"

namespace kiso {

namespace {

// Number of degree-1 neighbours of each vertex.
std::vector<int> pendant_counts(const Graph& g) {
    std::vector<int> c(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) ++c[g.neighbors(v).front()];
    return c;
}

VertexSet core_vertices(const Graph& g) {
    VertexSet core;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 1) core.push_back(v);
    return core;
}

} // namespace

std::vector<std::string> validate(const Graph& g, const CoronaCertificate& cert, int k) {
    std::vector<std::string> err;
    const int n = g.order();
    const VertexSet core = core_vertices(g);
    const auto pend = pendant_counts(g);
    auto in_range = [&](Vertex v) { return v >= 0 && v < n; };

    VertexSet claimed;
    if (cert.kind == CoronaCertificate::Kind::c4_leaves) {
        if (cert.cycle.size() != 4 || !std::all_of(cert.cycle.begin(), cert.cycle.end(), in_range)) {
            err.push_back("c4 certificate needs four cycle vertices");
            return err;
        }
        for (int i = 0; i < 4; ++i)
            if (!g.adjacent(cert.cycle[i], cert.cycle[(i + 1) % 4])) err.push_back("cycle edge missing");
        claimed = cert.cycle;
        std::sort(claimed.begin(), claimed.end());
        if (std::adjacent_find(claimed.begin(), claimed.end()) != claimed.end()) err.push_back("cycle repeats a vertex");
        if (induced_subgraph(g, claimed).size() != 4) err.push_back("core is not an induced 4-cycle");
        for (Vertex v : cert.cycle)
            if (pend[v] < k) err.push_back("cycle vertex " + std::to_string(v) + " has fewer than k leaves");
    } else {
        if (cert.pairs.empty()) {
            err.push_back("corona certificate has no (v, w) pairs");
            return err;
        }
        VertexSet vs;
        for (auto [v, w] : cert.pairs) {
            if (!in_range(v) || !in_range(w)) {
                err.push_back("pair vertex out of range");
                return err;
            }
            vs.push_back(v);
            claimed.push_back(v);
            claimed.push_back(w);
            if (!g.adjacent(v, w)) err.push_back("w " + std::to_string(w) + " is not adjacent to its v");
            int core_deg = 0;
            for (Vertex u : g.neighbors(w)) core_deg += g.degree(u) != 1;
            if (core_deg != 1) err.push_back("w " + std::to_string(w) + " is not a leaf of the core");
            if (pend[w] < k) err.push_back("w " + std::to_string(w) + " has fewer than k leaves");
        }
        std::sort(claimed.begin(), claimed.end());
        if (std::adjacent_find(claimed.begin(), claimed.end()) != claimed.end()) err.push_back("pairs repeat a vertex");
        std::sort(vs.begin(), vs.end());
        if (!is_connected(induced_subgraph(g, vs))) err.push_back("H' on the v vertices is disconnected");
    }
    if (claimed != core) err.push_back("certificate core differs from G minus its leaves");
    for (auto [v, c] : cert.leaf_assignment)
        if (!in_range(v) || pend[v] != c) err.push_back("leaf assignment disagrees at vertex " + std::to_string(v));
    return err;
}

Tree gen_corona_extremal(int k, int r, int n) {
    if (k < 1 || r < 1) throw PreconditionError("gen_corona_extremal needs k >= 1 and r >= 1");
    if (n < (k + 2) * r) throw PreconditionError("gen_corona_extremal needs n >= (k+2)r");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < r; ++i) edges.push_back({i, i + 1});
    for (int i = 0; i < r; ++i) edges.push_back({i, r + i});
    Graph base = build_graph(2 * r, edges);
    const int extra = n - (k + 2) * r;
    std::vector<std::pair<Vertex, int>> pend;
    if (r == 1) {
        pend.push_back({0, 1});
        pend.push_back({1, k - 1 + extra});
    } else {
        for (int i = 0; i < r; ++i) pend.push_back({r + i, k + (i == r - 1 ? extra : 0)});
    }
    return as_tree(add_pendants(base, pend));
}

std::pair<Graph, CoronaCertificate> gen_char_c4(int k, const std::array<int, 4>& leaf_counts) {
    if (k < 1) throw FamilyError("k must be >= 1");
    CoronaCertificate cert;
    cert.kind = CoronaCertificate::Kind::c4_leaves;
    cert.cycle = {0, 1, 2, 3};
    std::vector<std::pair<Vertex, int>> pend;
    for (int i = 0; i < 4; ++i) {
        if (leaf_counts[i] < k)
            throw FamilyError("cycle vertex " + std::to_string(i) + " gets " + std::to_string(leaf_counts[i]) +
                              " leaves, below k = " + std::to_string(k));
        pend.push_back({i, leaf_counts[i]});
        cert.leaf_assignment[i] = leaf_counts[i];
    }
    Graph g = add_pendants(build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), pend);
    return {std::move(g), std::move(cert)};
}

std::pair<Graph, CoronaCertificate> gen_char_corona(int k, const Graph& h, const std::vector<int>& w_leaves,
                                                    const std::vector<int>& v_leaves) {
    if (k < 1) throw FamilyError("k must be >= 1");
    const int m = h.order();
    if (m < 1 || !is_connected(h)) throw FamilyError("base graph H must be connected and nonempty");
    if (static_cast<int>(w_leaves.size()) != m || static_cast<int>(v_leaves.size()) != m)
        throw FamilyError("one leaf count per H vertex is needed for v and for w");
    std::vector<Edge> edges = h.edges();
    for (int i = 0; i < m; ++i) edges.push_back({i, m + i});
    CoronaCertificate cert;
    cert.kind = CoronaCertificate::Kind::corona_with_leaves;
    std::vector<std::pair<Vertex, int>> pend;
    for (int i = 0; i < m; ++i) {
        if (w_leaves[i] < k)
            throw FamilyError("w_" + std::to_string(i) + " gets " + std::to_string(w_leaves[i]) +
                              " leaves, below k = " + std::to_string(k));
        if (v_leaves[i] < 0) throw FamilyError("negative leaf count at v_" + std::to_string(i));
        cert.pairs.push_back({i, m + i});
        pend.push_back({m + i, w_leaves[i]});
        cert.leaf_assignment[m + i] = w_leaves[i];
        if (v_leaves[i] > 0) {
            pend.push_back({i, v_leaves[i]});
            cert.leaf_assignment[i] = v_leaves[i];
        }
    }
    Graph g = add_pendants(build_graph(2 * m, edges), pend);
    return {std::move(g), std::move(cert)};
}

std::optional<CoronaCertificate> recognize_char_orderminusleaves(const Graph& g, int k) {
    if (g.order() < 3 || !is_connected(g))
        throw PreconditionError("recognize_char_orderminusleaves needs a connected graph with n >= 3");
    const VertexSet core = core_vertices(g);
    if (core.size() < 2) return std::nullopt;
    const auto pend = pendant_counts(g);
    const Graph cg = induced_subgraph(g, core);
    const int m = cg.order();

    CoronaCertificate cert;
    for (Vertex v : core)
        if (pend[v] > 0) cert.leaf_assignment[v] = pend[v];

    bool cycle = m == 4 && cg.size() == 4;
    for (Vertex i = 0; i < m && cycle; ++i) cycle = cg.degree(i) == 2;
    if (cycle) {
        cert.kind = CoronaCertificate::Kind::c4_leaves;
        Vertex prev = 0, cur = 0;
        for (int step = 0; step < 4; ++step) {
            cert.cycle.push_back(core[cur]);
            auto nb = cg.neighbors(cur);
            Vertex nxt = (step == 0 || nb[0] != prev) ? nb[0] : nb[1];
            prev = cur;
            cur = nxt;
        }
    } else {
        cert.kind = CoronaCertificate::Kind::corona_with_leaves;
        if (m == 2) {
            // Core K2: either end may play w; the one with more leaves is the
            // only candidate that can meet the leaf condition.
            const Vertex a = core[0], b = core[1];
            cert.pairs.push_back(pend[b] >= pend[a] ? std::pair{a, b} : std::pair{b, a});
        } else {
            std::vector<bool> used(m, false);
            int matched = 0;
            for (Vertex w = 0; w < m; ++w) {
                if (cg.degree(w) != 1) continue;
                Vertex v = cg.neighbors(w).front();
                if (cg.degree(v) == 1 || used[v]) return std::nullopt;
                used[v] = true;
                cert.pairs.push_back({core[v], core[w]});
                matched += 2;
            }
            if (matched != m) return std::nullopt;
            std::sort(cert.pairs.begin(), cert.pairs.end());
        }
    }
    if (!validate(g, cert, k).empty()) return std::nullopt;
    return cert;
}

nlohmann::json to_json(const CoronaCertificate& c) {
    nlohmann::json j;
    j["family"] = "corona-char";
    if (c.kind == CoronaCertificate::Kind::c4_leaves) {
        j["kind"] = "c4_leaves";
        j["cycle"] = c.cycle;
    } else {
        j["kind"] = "corona_with_leaves";
        j["pairs"] = c.pairs;
    }
    auto& la = j["leaf_assignment"] = nlohmann::json::array();
    for (auto [v, cnt] : c.leaf_assignment) la.push_back({v, cnt});
    return j;
}

} // namespace kiso
