#include <algorithm>
#include <numeric>
#include <random>

#include "kiso/errors.hpp"
#include "kiso/families.hpp"

namespace kiso {

namespace {

enum class Part { none, a, b, c, x, y };

std::vector<Part> part_map(int n, const FCertificate& cert) {
    std::vector<Part> p(n, Part::none);
    auto mark = [&](const VertexSet& s, Part what) {
        for (Vertex v : s)
            if (v >= 0 && v < n) p[v] = what;
    };
    mark(cert.A, Part::a);
    mark(cert.B, Part::b);
    mark(cert.C, Part::c);
    mark(cert.X, Part::x);
    mark(cert.Y, Part::y);
    return p;
}

VertexSet sorted(VertexSet s) {
    std::sort(s.begin(), s.end());
    return s;
}

FCertificate certificate_from_copies(std::vector<std::array<Vertex, 3>> p3, std::vector<std::array<Vertex, 4>> p4) {
    FCertificate c;
    for (const auto& q : p3) {
        c.A.push_back(q[0]);
        c.B.push_back(q[1]);
        c.C.push_back(q[2]);
    }
    for (const auto& q : p4) {
        c.X.push_back(q[0]);
        c.Y.push_back(q[1]);
        c.Y.push_back(q[2]);
        c.X.push_back(q[3]);
    }
    c.A = sorted(std::move(c.A));
    c.B = sorted(std::move(c.B));
    c.C = sorted(std::move(c.C));
    c.X = sorted(std::move(c.X));
    c.Y = sorted(std::move(c.Y));
    c.p3_copies = std::move(p3);
    c.p4_copies = std::move(p4);
    return c;
}

FamilyInstance<FCertificate> assemble_F(int r, int s, const std::vector<Edge>& wiring) {
    const int n = 3 * r + 4 * s;
    std::vector<std::array<Vertex, 3>> p3;
    std::vector<std::array<Vertex, 4>> p4;
    std::vector<Edge> edges;
    std::vector<bool> port(n, false);
    for (int i = 0; i < r; ++i) {
        p3.push_back({3 * i, 3 * i + 1, 3 * i + 2});
        edges.push_back({3 * i, 3 * i + 1});
        edges.push_back({3 * i + 1, 3 * i + 2});
        port[3 * i] = true;
    }
    for (int j = 0; j < s; ++j) {
        const int q = 3 * r + 4 * j;
        p4.push_back({q, q + 1, q + 2, q + 3});
        edges.push_back({q, q + 1});
        edges.push_back({q + 1, q + 2});
        edges.push_back({q + 2, q + 3});
        port[q] = port[q + 3] = true;
    }
    for (auto [u, v] : wiring) {
        if (u < 0 || v < 0 || u >= n || v >= n || !port[u] || !port[v])
            throw FamilyError("wiring edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has an endpoint outside A u X");
        edges.push_back({u, v});
    }
    if (static_cast<int>(edges.size()) != n - 1)
        throw FamilyError("wiring must add exactly " + std::to_string(r + s - 1) + " edges to form a tree");
    Graph g;
    try {
        g = build_graph(n, edges);
    } catch (const GraphError& e) {
        throw FamilyError(std::string("invalid wiring: ") + e.what());
    }
    if (!is_connected(g)) throw FamilyError("wiring leaves the copies disconnected");
    FamilyInstance<FCertificate> inst{as_tree(std::move(g)), certificate_from_copies(std::move(p3), std::move(p4))};
    auto errors = validate(inst.tree, inst.cert);
    if (!errors.empty()) throw FamilyError(errors.front());
    return inst;
}

} // namespace

std::vector<std::string> validate(const Tree& t, const FCertificate& cert) {
    std::vector<std::string> err;
    const int n = t.order();
    const int total = static_cast<int>(cert.A.size() + cert.B.size() + cert.C.size() + cert.X.size() + cert.Y.size());
    std::vector<int> seen(n, 0);
    for (const VertexSet* s : {&cert.A, &cert.B, &cert.C, &cert.X, &cert.Y})
        for (Vertex v : *s) {
            if (v < 0 || v >= n) {
                err.push_back("vertex " + std::to_string(v) + " out of range");
                return err;
            }
            ++seen[v];
        }
    if (total != n || std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
        err.push_back("A, B, C, X, Y do not partition V");
        return err;
    }
    const auto part = part_map(n, cert);
    const Graph& g = t.graph();

    // Copy membership; every vertex lies in exactly one copy.
    std::vector<int> copy(n, -1);
    int id = 0;
    for (const auto& q : cert.p3_copies) {
        if (part[q[0]] != Part::a || part[q[1]] != Part::b || part[q[2]] != Part::c)
            err.push_back("P3 copy labels are not (a, b, c)");
        if (!g.adjacent(q[0], q[1]) || !g.adjacent(q[1], q[2])) err.push_back("P3 copy is not a path a-b-c");
        for (Vertex v : q) copy[v] = id;
        ++id;
    }
    for (const auto& q : cert.p4_copies) {
        if (part[q[0]] != Part::x || part[q[1]] != Part::y || part[q[2]] != Part::y || part[q[3]] != Part::x)
            err.push_back("P4 copy labels are not (x, y, y, x)");
        if (!g.adjacent(q[0], q[1]) || !g.adjacent(q[1], q[2]) || !g.adjacent(q[2], q[3]))
            err.push_back("P4 copy is not a path x-y-y-x");
        for (Vertex v : q) copy[v] = id;
        ++id;
    }
    if (cert.A.size() != cert.p3_copies.size() || cert.X.size() != 2 * cert.p4_copies.size() ||
        std::find(copy.begin(), copy.end(), -1) != copy.end())
        err.push_back("copies do not cover every vertex exactly once");
    if (!err.empty()) return err;

    auto in_ax = [&](Vertex v) { return part[v] == Part::a || part[v] == Part::x; };
    for (auto [u, v] : g.edges()) {
        const bool copy_edge = copy[u] == copy[v];
        if (!copy_edge && !(in_ax(u) && in_ax(v)))
            err.push_back("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") joins copies outside A u X");
        if (part[u] == Part::x && part[v] == Part::x && copy_edge)
            err.push_back("(d) X-X edge inside one P4 copy");
    }
    if (sorted(cert.C) != t.leaves()) err.push_back("(a) C is not the set of leaves");
    if (sorted(cert.B) != t.supports()) err.push_back("(b) B is not the set of support vertices");
    for (Vertex v = 0; v < n; ++v) {
        int na = 0, nb = 0, nc = 0, nx = 0, ny = 0;
        for (Vertex u : g.neighbors(v)) {
            switch (part[u]) {
            case Part::a: ++na; break;
            case Part::b: ++nb; break;
            case Part::c: ++nc; break;
            case Part::x: ++nx; break;
            case Part::y: ++ny; break;
            case Part::none: break;
            }
        }
        const std::string at = " at vertex " + std::to_string(v);
        switch (part[v]) {
        case Part::b:
            if (g.degree(v) != 2 || na != 1 || nc != 1) err.push_back("(b) B vertex needs one A and one C neighbour" + at);
            break;
        case Part::x:
            if (ny != 1 || nx + na < 1) err.push_back("(c) X vertex needs one Y and >= 1 X or A neighbour" + at);
            break;
        case Part::y:
            if (g.degree(v) != 2 || nx != 1 || ny != 1) err.push_back("(e) Y vertex needs one X and one Y neighbour" + at);
            break;
        case Part::a:
            if (t.is_leaf(v)) err.push_back("A vertex is a leaf" + at);
            break;
        default: break;
        }
    }
    const int a = static_cast<int>(cert.A.size());
    const int x = static_cast<int>(cert.X.size());
    if (a < 2) err.push_back("(g) needs at least two P3 copies");
    if (cert.Y.size() != cert.X.size() || x % 2 != 0) err.push_back("(f) |X| = |Y| must be even");
    if (n != 3 * a + 2 * x || n < 6) err.push_back("(h) n = 3|A| + 2|X| >= 6 fails");
    if (n + t.leaf_count() != 4 * a + 2 * x) err.push_back("(i) (n + l)/4 != |A| + |X|/2");

    // (j): components of the forest induced on X u Y have order divisible by 4.
    std::vector<Vertex> xy;
    for (Vertex v = 0; v < n; ++v)
        if (part[v] == Part::x || part[v] == Part::y) xy.push_back(v);
    Graph f = induced_subgraph(g, xy);
    std::vector<bool> done(f.order(), false);
    for (Vertex s = 0; s < f.order(); ++s) {
        if (done[s]) continue;
        auto d = bfs_distances(f, s);
        int size = 0;
        for (Vertex v = 0; v < f.order(); ++v)
            if (d[v] >= 0) done[v] = true, ++size;
        if (size % 4 != 0) {
            err.push_back("(j) X u Y component of order " + std::to_string(size));
            break;
        }
    }
    return err;
}

FamilyInstance<FCertificate> gen_family_F(int r, int s, const std::optional<std::vector<Edge>>& wiring) {
    if (r < 2) throw FamilyError("r must be >= 2");
    if (s < 0) throw FamilyError("s must be >= 0");
    if (wiring) return assemble_F(r, s, *wiring);
    std::vector<Edge> w;
    if (s == 0) {
        for (int i = 0; i + 1 < r; ++i) w.push_back({3 * i, 3 * (i + 1)});
    } else {
        const int first = 3 * r;
        const int last = 3 * r + 4 * (s - 1) + 3;
        for (int j = 0; j + 1 < s; ++j) w.push_back({3 * r + 4 * j + 3, 3 * r + 4 * (j + 1)});
        w.push_back({0, first});
        for (int i = 1; i < r; ++i) w.push_back({3 * i, last});
    }
    return assemble_F(r, s, w);
}

FamilyInstance<FCertificate> random_family_F(int r, int s, std::uint64_t seed) {
    if (r < 2) throw FamilyError("r must be >= 2");
    if (s < 0) throw FamilyError("s must be >= 0");
    std::mt19937_64 rng(seed);
    const int m = r + s; // copy nodes: 0..r-1 are P3, r.. are P4
    // Prufer sequence in which every P4 node occurs, so each has degree >= 2
    // and both of its ends can be wired.
    std::vector<int> seq;
    for (int j = 0; j < s; ++j) seq.push_back(r + j);
    std::uniform_int_distribution<int> any(0, m - 1);
    while (static_cast<int>(seq.size()) < m - 2) seq.push_back(any(rng));
    std::shuffle(seq.begin(), seq.end(), rng);
    Tree copy_tree = prufer_decode(seq);

    std::vector<std::vector<int>> incident(m); // edge indices per node
    auto copy_edges = copy_tree.graph().edges();
    for (int e = 0; e < static_cast<int>(copy_edges.size()); ++e) {
        incident[copy_edges[e].first].push_back(e);
        incident[copy_edges[e].second].push_back(e);
    }
    // port[node][edge index] = vertex used by that node on that edge
    std::vector<std::vector<std::pair<int, Vertex>>> port(m);
    for (int v = 0; v < m; ++v) {
        auto inc = incident[v];
        std::shuffle(inc.begin(), inc.end(), rng);
        if (v < r) {
            for (int e : inc) port[v].push_back({e, 3 * v});
            continue;
        }
        const int q = 3 * r + 4 * (v - r);
        std::bernoulli_distribution coin(0.5);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            Vertex end = i == 0 ? q : i == 1 ? q + 3 : (coin(rng) ? q : q + 3);
            port[v].push_back({inc[i], end});
        }
    }
    auto port_of = [&](int node, int e) {
        for (auto [pe, vtx] : port[node])
            if (pe == e) return vtx;
        return -1;
    };
    std::vector<Edge> wiring;
    for (int e = 0; e < static_cast<int>(copy_edges.size()); ++e)
        wiring.push_back({port_of(copy_edges[e].first, e), port_of(copy_edges[e].second, e)});
    return assemble_F(r, s, wiring);
}

std::optional<FCertificate> recognize_F(const Tree& t) {
    const int n = t.order();
    if (n < 6) return std::nullopt;
    const Graph& g = t.graph();
    std::vector<Part> part(n, Part::none);
    std::vector<std::array<Vertex, 3>> p3;
    for (Vertex c : t.leaves()) part[c] = Part::c;
    for (Vertex c : t.leaves()) {
        Vertex b = g.neighbors(c).front();
        if (g.degree(b) != 2 || part[b] != Part::none) return std::nullopt;
        part[b] = Part::b;
        auto nb = g.neighbors(b);
        Vertex a = nb[0] == c ? nb[1] : nb[0];
        if (part[a] != Part::none) return std::nullopt;
        part[a] = Part::a;
        p3.push_back({a, b, c});
    }

    // Peel the forest on the remaining vertices into paths x-y-y'-x', always
    // starting from a vertex with exactly one remaining neighbour.
    std::vector<bool> alive(n, false);
    std::vector<int> rdeg(n, 0);
    int remaining = 0;
    for (Vertex v = 0; v < n; ++v)
        if (part[v] == Part::none) alive[v] = true, ++remaining;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v])
            for (Vertex u : g.neighbors(v)) rdeg[v] += alive[u];
    auto other_alive = [&](Vertex v, Vertex not_this) {
        for (Vertex u : g.neighbors(v))
            if (alive[u] && u != not_this) return u;
        return -1;
    };
    std::vector<std::array<Vertex, 4>> p4;
    while (remaining > 0) {
        Vertex x = -1;
        for (Vertex v = 0; v < n && x < 0; ++v)
            if (alive[v] && rdeg[v] == 1) x = v;
        if (x < 0) return std::nullopt;
        Vertex y = other_alive(x, -1);
        if (rdeg[y] != 2) return std::nullopt;
        Vertex y2 = other_alive(y, x);
        if (y2 < 0 || rdeg[y2] != 2) return std::nullopt;
        Vertex x2 = other_alive(y2, y);
        if (x2 < 0) return std::nullopt;
        p4.push_back({x, y, y2, x2});
        for (Vertex v : {x, y, y2, x2}) alive[v] = false;
        for (Vertex v : {x, y, y2, x2})
            for (Vertex u : g.neighbors(v))
                if (alive[u]) --rdeg[u];
        remaining -= 4;
    }
    FCertificate cert = certificate_from_copies(std::move(p3), std::move(p4));
    if (!validate(t, cert).empty()) return std::nullopt;
    return cert;
}

IsolationSolution min_iso_set_F(const Tree& t, const FCertificate& cert, Vertex root) {
    const bool in_a = std::binary_search(cert.A.begin(), cert.A.end(), root);
    const bool in_x = std::binary_search(cert.X.begin(), cert.X.end(), root);
    if (!in_a && !in_x) throw PreconditionError("root must be a vertex of A u X");
    auto dist = bfs_distances(t.graph(), root);
    VertexSet d = cert.A;
    for (const auto& q : cert.p4_copies) d.push_back(dist[q[0]] < dist[q[3]] ? q[0] : q[3]);
    std::sort(d.begin(), d.end());
    return {1, std::move(d), SolveMethod::family_construction};
}

nlohmann::json to_json(const FCertificate& c) {
    nlohmann::json j;
    j["family"] = "F";
    j["A"] = c.A;
    j["B"] = c.B;
    j["C"] = c.C;
    j["X"] = c.X;
    j["Y"] = c.Y;
    j["p3_copies"] = c.p3_copies;
    j["p4_copies"] = c.p4_copies;
    return j;
}

} // namespace kiso
