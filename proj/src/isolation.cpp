#include "kiso/isolation.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "kiso/errors.hpp"

namespace kiso {

std::string_view to_string(SolveMethod m) {
    switch (m) {
    case SolveMethod::brute_force: return "brute_force";
    case SolveMethod::tree_dp: return "tree_dp";
    case SolveMethod::family_construction: return "family_construction";
    }
    return "?";
}

Residual residual(const Graph& g, std::span<const Vertex> set) {
    auto covered = closed_neighborhood(g, set);
    Residual r;
    std::size_t ci = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (ci < covered.size() && covered[ci] == v) {
            ++ci;
            continue;
        }
        r.original.push_back(v);
    }
    r.graph = induced_subgraph(g, r.original);
    return r;
}

bool contains_k_star(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    return g.order() > 0 && g.max_degree() >= k;
}

bool is_isolating(const Graph& g, std::span<const Vertex> set, int k) {
    return !contains_k_star(residual(g, set).graph, k);
}

std::optional<Vertex> isolation_witness(const Graph& g, std::span<const Vertex> set, int k) {
    auto r = residual(g, set);
    for (Vertex v = 0; v < r.graph.order(); ++v)
        if (r.graph.degree(v) >= k) return r.original[v];
    return std::nullopt;
}

int residual_max_degree(const Graph& g, std::span<const Vertex> set) {
    auto r = residual(g, set);
    return r.graph.order() == 0 ? 0 : r.graph.max_degree();
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> closed_masks(const Graph& g) {
    std::vector<Mask> m(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        m[v] = Mask{1} << v;
        for (Vertex u : g.neighbors(v)) m[v] |= Mask{1} << u;
    }
    return m;
}

void check_brute_force_order(const Graph& g, const std::optional<int>& cap) {
    if (g.order() > kBruteForceMaxOrder)
        throw PreconditionError("brute force limited to n <= " + std::to_string(kBruteForceMaxOrder));
    if (g.order() > kBruteForceUncappedOrder && !cap)
        throw PreconditionError("brute force on n > " + std::to_string(kBruteForceUncappedOrder) +
                                " requires a size cap");
}

// Visits subsets in increasing size, lexicographic within a size; stops at the
// first one accepted by `pred`.
template <class Pred>
std::optional<VertexSet> first_subset(int n, int max_size, const std::vector<Mask>& closed, Pred pred) {
    for (int s = 0; s <= max_size; ++s) {
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            Mask covered = 0;
            for (int v : idx) covered |= closed[v];
            if (pred(covered)) return VertexSet(idx.begin(), idx.end());
            int i = s - 1;
            while (i >= 0 && idx[i] == n - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace

IsolationSolution iota_bruteforce(const Graph& g, int k, std::optional<int> size_cap) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    check_brute_force_order(g, size_cap);
    const int n = g.order();
    const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    auto closed = closed_masks(g);
    std::vector<Mask> open(n);
    for (Vertex v = 0; v < n; ++v) open[v] = closed[v] & ~(Mask{1} << v);

    auto isolates = [&](Mask covered) {
        Mask rest = all & ~covered;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::popcount(open[v] & ~covered) >= k) return false;
        }
        return true;
    };
    const int max_size = size_cap ? std::min(*size_cap, n) : n;
    auto found = first_subset(n, max_size, closed, isolates);
    if (!found) throw SizeCapExceeded(max_size);
    return {k, std::move(*found), SolveMethod::brute_force};
}

DominationSolution gamma_bruteforce(const Graph& g, std::optional<int> size_cap) {
    check_brute_force_order(g, size_cap);
    const int n = g.order();
    const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    auto closed = closed_masks(g);
    const int max_size = size_cap ? std::min(*size_cap, n) : n;
    auto found = first_subset(n, max_size, closed, [&](Mask covered) { return covered == all; });
    if (!found) throw SizeCapExceeded(max_size);
    return {std::move(*found)};
}

} // namespace kiso
