#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kiso {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

// Immutable undirected simple graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    // Every edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    friend Graph build_graph(int n, const std::vector<Edge>& edges);
    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
};

// Throws GraphError naming the offending edge on out-of-range endpoints,
// self-loops and duplicate edges.
Graph build_graph(int n, const std::vector<Edge>& edges);

// A connected acyclic Graph with cached leaf/support statistics.
//
// For n = 1 the single vertex is not counted as a leaf (leaf_count() == 0).
// For n = 2 both vertices are leaves and both are support vertices.
class Tree {
public:
    const Graph& graph() const { return graph_; }
    int order() const { return graph_.order(); }
    int degree(Vertex v) const { return graph_.degree(v); }
    std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
    int max_degree() const { return graph_.max_degree(); }

    const VertexSet& leaves() const { return leaves_; }
    const VertexSet& supports() const { return supports_; }
    const VertexSet& strong_supports() const { return strong_supports_; }
    int leaf_count() const { return static_cast<int>(leaves_.size()); }
    int support_count() const { return static_cast<int>(supports_.size()); }
    bool is_leaf(Vertex v) const { return order() >= 2 && degree(v) == 1; }
    bool is_support(Vertex v) const;

    // degree -> number of vertices with that degree (n_i)
    const std::map<int, int>& degree_histogram() const { return degree_histogram_; }

private:
    friend Tree as_tree(Graph g);
    explicit Tree(Graph g);

    Graph graph_;
    VertexSet leaves_;
    VertexSet supports_;
    VertexSet strong_supports_;
    std::map<int, int> degree_histogram_;
};

// Throws GraphError if g is empty, disconnected or has a cycle.
Tree as_tree(Graph g);

struct PathWitness {
    std::vector<Vertex> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// BFS distances from a set of sources; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);
int diameter(const Tree& t);

// A longest path. With maximize_u1_degree, the path (in either orientation)
// maximizes deg(u_1) among all diametral paths. Requires n >= 2.
PathWitness diameter_path(const Tree& t, bool maximize_u1_degree);

// N[D] = D together with all neighbours of D.
VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> set);

// K_{1,k}: order k+1 with a vertex of degree k. K_{1,1} is K_2.
bool is_star(const Tree& t, int k);
bool is_star(const Tree& t);

// Center-rooted AHU encoding; equal iff the trees are isomorphic.
std::string canonical_code(const Tree& t);
// Inverse of canonical_code up to relabelling: vertices are numbered in
// preorder of the encoding.
Tree tree_from_code(const std::string& code);

std::vector<Vertex> tree_centers(const Tree& t);

// Standard Prufer bijection; the tree has seq.size() + 2 vertices.
Tree prufer_decode(std::span<const int> seq);

// Adds pendant vertices numbered n, n+1, ... to the given attachment points.
Graph add_pendants(const Graph& g, const std::vector<std::pair<Vertex, int>>& counts);

// Induced subgraph on `keep` (any order); index i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

} // namespace kiso
