#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "kiso/graph.hpp"

namespace kiso {

enum class SolveMethod { brute_force, tree_dp, family_construction };
std::string_view to_string(SolveMethod m);

// A k-isolating set D: G - N[D] contains no K_{1,k}.
struct IsolationSolution {
    int k = 1;
    VertexSet set;
    SolveMethod method = SolveMethod::brute_force;
    int size() const { return static_cast<int>(set.size()); }
};

// A dominating set: N[set] = V.
struct DominationSolution {
    VertexSet set;
    int size() const { return static_cast<int>(set.size()); }
};

// G - N[D] with the map back to original vertex indices.
struct Residual {
    Graph graph;
    std::vector<Vertex> original;
};

Residual residual(const Graph& g, std::span<const Vertex> set);

// K_{1,k} is a subgraph iff some vertex has degree >= k.
bool contains_k_star(const Graph& g, int k);

bool is_isolating(const Graph& g, std::span<const Vertex> set, int k);

// A vertex of G - N[D] whose residual degree is >= k, if any (original index).
std::optional<Vertex> isolation_witness(const Graph& g, std::span<const Vertex> set, int k);
int residual_max_degree(const Graph& g, std::span<const Vertex> set);

constexpr int kBruteForceMaxOrder = 24;
constexpr int kBruteForceUncappedOrder = 16;

// Minimum k-isolating set by increasing-size subset search; within a size the
// lexicographically smallest set wins. Requires n <= 24, and a size_cap when
// n > 16. Throws SizeCapExceeded if nothing of size <= size_cap isolates.
IsolationSolution iota_bruteforce(const Graph& g, int k, std::optional<int> size_cap = std::nullopt);

// Exact minimum k-isolating set of a tree by rooted dynamic programming.
IsolationSolution iota_tree_dp(const Tree& t, int k, Vertex root = 0);

// Minimum dominating set, same search order and caps as iota_bruteforce.
DominationSolution gamma_bruteforce(const Graph& g, std::optional<int> size_cap = std::nullopt);

// Replaces every leaf of D by its support vertex. Needs g connected, n >= 3.
// If D is k-isolating the result is too; for a minimum D the size is kept.
IsolationSolution normalize_no_leaves(const Graph& g, const IsolationSolution& sol);

// Replaces every degree-2 support vertex of D by its non-leaf neighbour.
// Needs k = 1, n >= 5 and a leaf-free D. Isolating input stays isolating;
// for a minimum D the size is kept.
IsolationSolution normalize_no_deg2_support(const Tree& t, const IsolationSolution& sol);

} // namespace kiso
