#include "kiso/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

#include "kiso/errors.hpp"

namespace kiso {

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (const auto& e : edges) {
        auto [u, v] = e;
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge " + edge_str(e) + " has an endpoint outside [0," + std::to_string(n) + ")");
        if (u == v) throw GraphError("self-loop " + edge_str(e));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end()) throw GraphError("duplicate edge " + edge_str({std::min(v, *dup), std::max(v, *dup)}));
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

Tree::Tree(Graph g) : graph_(std::move(g)) {
    const int n = graph_.order();
    for (Vertex v = 0; v < n; ++v) degree_histogram_[graph_.degree(v)]++;
    if (n < 2) return;
    for (Vertex v = 0; v < n; ++v)
        if (graph_.degree(v) == 1) leaves_.push_back(v);
    for (Vertex v = 0; v < n; ++v) {
        int leaf_nbrs = 0;
        for (Vertex u : graph_.neighbors(v))
            if (graph_.degree(u) == 1) ++leaf_nbrs;
        if (leaf_nbrs >= 1) supports_.push_back(v);
        if (leaf_nbrs >= 2) strong_supports_.push_back(v);
    }
}

bool Tree::is_support(Vertex v) const {
    return std::binary_search(supports_.begin(), supports_.end(), v);
}

Tree as_tree(Graph g) {
    if (g.order() == 0) throw GraphError("empty graph is not a tree");
    if (!is_connected(g)) throw GraphError("graph is disconnected");
    if (g.size() != g.order() - 1) throw GraphError("graph is cyclic (edge count != n-1)");
    return Tree(std::move(g));
}

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
    std::vector<int> dist(g.order(), -1);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (dist[s] == 0) continue;
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : g.neighbors(v)) {
            if (dist[u] >= 0) continue;
            dist[u] = dist[v] + 1;
            queue.push_back(u);
        }
    }
    return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    return bfs_distances(g, std::span<const Vertex>(&source, 1));
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

int diameter(const Tree& t) {
    if (t.order() < 2) return 0;
    return diameter_path(t, false).length();
}

PathWitness diameter_path(const Tree& t, bool maximize_u1_degree) {
    const Graph& g = t.graph();
    if (g.order() < 2) throw PreconditionError("diameter_path needs n >= 2");

    auto farthest = [](const std::vector<int>& d) {
        return static_cast<Vertex>(std::max_element(d.begin(), d.end()) - d.begin());
    };
    auto from0 = bfs_distances(g, 0);
    Vertex a = farthest(from0);
    auto from_a = bfs_distances(g, a);
    Vertex b = farthest(from_a);
    const int diam = from_a[b];

    Vertex start = a;
    if (maximize_u1_degree) {
        // In a tree ecc(v) = max(d(v,a), d(v,b)) for diametral endpoints a, b;
        // the peripheral vertices are exactly the possible u_0.
        auto from_b = bfs_distances(g, b);
        int best_deg = -1;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (std::max(from_a[v], from_b[v]) != diam) continue;
            Vertex u1 = g.neighbors(v).front();
            if (g.degree(u1) > best_deg) {
                best_deg = g.degree(u1);
                start = v;
            }
        }
    }

    auto dist = bfs_distances(g, start);
    Vertex end = farthest(dist);
    PathWitness path;
    path.vertices.push_back(end);
    Vertex cur = end;
    while (cur != start) {
        for (Vertex u : g.neighbors(cur)) {
            if (dist[u] == dist[cur] - 1) {
                cur = u;
                break;
            }
        }
        path.vertices.push_back(cur);
    }
    // path currently runs end -> start; u_0 must be `start`.
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> mark(g.order(), 0);
    for (Vertex v : set) {
        mark[v] = 1;
        for (Vertex u : g.neighbors(v)) mark[u] = 1;
    }
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

bool is_star(const Tree& t, int k) {
    return k >= 1 && t.order() == k + 1 && t.max_degree() == k;
}

bool is_star(const Tree& t) {
    return t.order() >= 2 && t.max_degree() == t.order() - 1;
}

Tree prufer_decode(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int x : seq) {
        if (x < 0 || x >= n)
            throw GraphError("Prufer entry " + std::to_string(x) + " outside [0," + std::to_string(n) + ")");
        ++degree[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.push(x);
    }
    int u = leaves.top();
    leaves.pop();
    int v = leaves.top();
    edges.emplace_back(u, v);
    return as_tree(build_graph(n, edges));
}

Graph add_pendants(const Graph& g, const std::vector<std::pair<Vertex, int>>& counts) {
    std::vector<Edge> edges = g.edges();
    int next = g.order();
    for (auto [v, c] : counts) {
        if (v < 0 || v >= g.order()) throw GraphError("pendant attachment point out of range");
        for (int i = 0; i < c; ++i) edges.emplace_back(v, next++);
    }
    return build_graph(next, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<int> index(g.order(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        for (Vertex u : g.neighbors(keep[i]))
            if (index[u] > i) edges.emplace_back(i, index[u]);
    return build_graph(static_cast<int>(keep.size()), edges);
}

} // namespace kiso
