#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kiso/graph.hpp"
#include "kiso/isolation.hpp"
#include "json.hpp"

namespace kiso {

// ---- Family F: P3 copies (a, b, c) and P4 copies (x, y, y', x') --------------

struct FCertificate {
    VertexSet A, B, C, X, Y;
    std::vector<std::array<Vertex, 3>> p3_copies; // (a, b, c)
    std::vector<std::array<Vertex, 4>> p4_copies; // (x, y, y', x')

    int p3_count() const { return static_cast<int>(p3_copies.size()); }
    int p4_count() const { return static_cast<int>(p4_copies.size()); }
};

// Every violated defining property, as text. Empty means the certificate is
// valid for t.
std::vector<std::string> validate(const Tree& t, const FCertificate& cert);

template <class Cert>
struct FamilyInstance {
    Tree tree;
    Cert cert;
};

// Copy i of P3 is a = 3i, b = 3i+1, c = 3i+2. Copy j of P4 starts at
// q = 3r + 4j: x = q, y = q+1, y' = q+2, x' = q+3.
//
// Without a wiring the default layout is used: for s = 0 the A vertices form a
// path; otherwise the P4 copies are chained x'_j - x_{j+1}, a_0 joins x_0 and
// every other A vertex joins x'_{s-1}. A custom wiring lists the extra edges,
// all inside A u X. Throws FamilyError if the result is not a tree or leaves
// an A or X vertex as a leaf.
FamilyInstance<FCertificate> gen_family_F(int r, int s, const std::optional<std::vector<Edge>>& wiring = std::nullopt);

// A random member with r P3 copies and s P4 copies (random copy tree and
// random port choices), reproducible from the seed.
FamilyInstance<FCertificate> random_family_F(int r, int s, std::uint64_t seed);

// The labeling is forced by the leaves, so no search is needed: C = leaves,
// B = supports, A = their other neighbours, and the rest is peeled into P4
// copies from the leaves of the forest it induces.
std::optional<FCertificate> recognize_F(const Tree& t);

// A together with, per P4 copy, the X end closer to root. Root must be in A u X.
IsolationSolution min_iso_set_F(const Tree& t, const FCertificate& cert, Vertex root);

// ---- Family T_k --------------------------------------------------------------

struct TkCertificate {
    VertexSet A, B, C, L;
    int h = 0;  // nontrivial components of the forest on A
    int n0 = 0; // |A|
};

std::vector<std::string> validate(const Tree& t, const TkCertificate& cert, int k);

// Input for gen_family_Tk. A vertices are 0..n0-1 with a_forest edges among
// them; B vertex of a_i is n0+i. c_groups[j] lists the A indices whose B vertex
// hangs from the j-th C vertex (2n0+j), which then gets k - |group| leaves.
struct TkWiring {
    int n0 = 0;
    std::vector<Edge> a_forest;
    std::vector<std::vector<int>> c_groups;
};

// Throws FamilyError naming the first violated clause.
FamilyInstance<TkCertificate> gen_family_Tk(int k, const TkWiring& wiring);

// Random forest on n0 A vertices with h nontrivial components, then h - 1
// merges of C vertices joining distinct components. Retries a bounded number
// of times; throws FamilyError if n0 < 2h or no wiring is found.
TkWiring random_Tk_wiring(int k, int n0, int h, std::uint64_t seed);

// Exact: a tree DP over the labels {A, B, C, L} with the local clauses of the
// family, followed by full validation. Requires k >= 2.
std::optional<TkCertificate> recognize_Tk(const Tree& t, int k);

// Grows D = W = A_1 one layer of A components at a time (those at distance 4
// from W), taking each new component minus its vertices at distance 4.
// Throws FamilyError if the procedure stalls.
IsolationSolution min_iso_set_Tk(const Tree& t, const TkCertificate& cert, int k);

// ---- Graphs with iota_k = (n - l)/2 -------------------------------------------

struct CoronaCertificate {
    enum class Kind { c4_leaves, corona_with_leaves };
    Kind kind = Kind::c4_leaves;
    std::vector<Vertex> cycle;                 // c4_leaves: the 4-cycle in order
    std::vector<std::pair<Vertex, Vertex>> pairs; // corona: (v_i, w_i)
    std::map<Vertex, int> leaf_assignment;     // core vertex -> pendant leaves
};

std::vector<std::string> validate(const Graph& g, const CoronaCertificate& cert, int k);

// Path v_1..v_r (vertices 0..r-1), a center w_i = r+i-1 joined to each v_i
// with k leaves, and n - (k+2)r extra leaves on w_r. For r = 1 that graph is a
// star, so one leaf of w_1 moves to v_1 instead (n - l stays 2).
// Throws PreconditionError if n < (k+2)r.
Tree gen_corona_extremal(int k, int r, int n);

// A 4-cycle 0-1-2-3 with leaf_counts[i] leaves on vertex i (each >= k).
std::pair<Graph, CoronaCertificate> gen_char_c4(int k, const std::array<int, 4>& leaf_counts);

// Corona of the connected graph h: v_i = i, w_i = m+i, then w_leaves[i] >= k
// leaves on each w_i and v_leaves[i] >= 0 on each v_i.
std::pair<Graph, CoronaCertificate> gen_char_corona(int k, const Graph& h, const std::vector<int>& w_leaves,
                                                    const std::vector<int>& v_leaves);

// Strips the leaves and matches the core against C4 or a corona, then checks
// the leaf counts. Requires a connected graph with n >= 3.
std::optional<CoronaCertificate> recognize_char_orderminusleaves(const Graph& g, int k);

// ---- Other constructions ----------------------------------------------------

// Path 0-1-2-3 with 2k-1 extra leaves on vertex 1: n = 2k+3, l = 2k+1,
// iota = 1, so (n + l)/4 - iota = k.
Tree gen_spider_gap(int k);

// Adds extra leaves at B vertices of a member of F. Throws FamilyError when a
// key is not a support vertex.
Tree add_twin_leaves(const Tree& t, const FCertificate& cert, const std::map<Vertex, int>& extra);

// Keeps one leaf per support vertex (the smallest index); vertices are
// renumbered in increasing order of the survivors.
Tree strip_twin_leaves(const Tree& t);

nlohmann::json to_json(const FCertificate& c);
nlohmann::json to_json(const TkCertificate& c);
nlohmann::json to_json(const CoronaCertificate& c);

} // namespace kiso
