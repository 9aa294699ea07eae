#include <algorithm>
#include <string>
#include <vector>

#include "kiso/errors.hpp"
#include "kiso/graph.hpp"

namespace kiso {

namespace {

// AHU code of the tree rooted at `root`: "(" + sorted child codes + ")".
std::string rooted_code(const Graph& g, Vertex root) {
    const int n = g.order();
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    std::vector<Vertex> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Vertex u : g.neighbors(v)) {
            if (parent[u] != -1) continue;
            parent[u] = v;
            stack.push_back(u);
        }
    }
    std::vector<std::vector<std::string>> child_codes(n);
    std::string code;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        auto& kids = child_codes[v];
        std::sort(kids.begin(), kids.end());
        code.clear();
        code.push_back('(');
        for (auto& c : kids) code += c;
        code.push_back(')');
        kids.clear();
        kids.shrink_to_fit();
        if (v != root) child_codes[parent[v]].push_back(code);
    }
    return code;
}

} // namespace

std::vector<Vertex> tree_centers(const Tree& t) {
    const Graph& g = t.graph();
    const int n = g.order();
    if (n <= 2) {
        std::vector<Vertex> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return all;
    }
    // Peel leaves layer by layer.
    std::vector<int> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex u : g.neighbors(v))
                if (--deg[u] == 1) next.push_back(u);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string canonical_code(const Tree& t) {
    auto centers = tree_centers(t);
    std::string best;
    for (Vertex c : centers) {
        std::string code = rooted_code(t.graph(), c);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

Tree tree_from_code(const std::string& code) {
    std::vector<Edge> edges;
    std::vector<Vertex> stack;
    int n = 0;
    for (char ch : code) {
        if (ch == '(') {
            if (!stack.empty()) edges.emplace_back(stack.back(), n);
            else if (n > 0) throw GraphError("canonical code has more than one root");
            stack.push_back(n++);
        } else if (ch == ')') {
            if (stack.empty()) throw GraphError("unbalanced canonical code");
            stack.pop_back();
        } else {
            throw GraphError(std::string("unexpected character in canonical code: ") + ch);
        }
    }
    if (!stack.empty() || n == 0) throw GraphError("unbalanced canonical code");
    return as_tree(build_graph(n, edges));
}

} // namespace kiso
