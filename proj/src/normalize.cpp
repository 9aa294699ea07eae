#include <algorithm>

#include "kiso/errors.hpp"
#include "kiso/isolation.hpp"

namespace kiso {

namespace {

void check_members(const Graph& g, const VertexSet& set) {
    for (Vertex v : set)
        if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

VertexSet sorted_unique(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

} // namespace

IsolationSolution normalize_no_leaves(const Graph& g, const IsolationSolution& sol) {
    if (g.order() < 3) throw PreconditionError("normalize_no_leaves needs n >= 3");
    if (!is_connected(g)) throw PreconditionError("normalize_no_leaves needs a connected graph");
    check_members(g, sol.set);
    VertexSet out;
    for (Vertex v : sol.set) out.push_back(g.degree(v) == 1 ? g.neighbors(v).front() : v);
    IsolationSolution res = sol;
    res.set = sorted_unique(std::move(out));
    return res;
}

IsolationSolution normalize_no_deg2_support(const Tree& t, const IsolationSolution& sol) {
    if (sol.k != 1) throw PreconditionError("normalize_no_deg2_support is defined for k = 1");
    if (t.order() < 5) throw PreconditionError("normalize_no_deg2_support needs n >= 5");
    check_members(t.graph(), sol.set);
    VertexSet out;
    for (Vertex v : sol.set) {
        if (t.is_leaf(v)) throw PreconditionError("input set contains leaf " + std::to_string(v));
        if (t.degree(v) == 2 && t.is_support(v)) {
            auto nb = t.neighbors(v);
            out.push_back(t.is_leaf(nb[0]) ? nb[1] : nb[0]);
        } else {
            out.push_back(v);
        }
    }
    IsolationSolution res = sol;
    res.set = sorted_unique(std::move(out));
    return res;
}

} // namespace kiso
