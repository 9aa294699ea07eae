#include <algorithm>

#include "kiso/errors.hpp"
#include "kiso/families.hpp"

namespace kiso {

Tree gen_spider_gap(int k) {
    if (k < 1) throw PreconditionError("gen_spider_gap needs k >= 1");
    Graph path = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    return as_tree(add_pendants(path, {{1, 2 * k - 1}}));
}

Tree add_twin_leaves(const Tree& t, const FCertificate& cert, const std::map<Vertex, int>& extra) {
    auto errors = validate(t, cert);
    if (!errors.empty()) throw FamilyError("base tree is not certified in F: " + errors.front());
    std::vector<std::pair<Vertex, int>> pend;
    for (auto [v, count] : extra) {
        if (!std::binary_search(cert.B.begin(), cert.B.end(), v))
            throw FamilyError("twin leaves key " + std::to_string(v) + " is not a support vertex");
        if (count < 0) throw FamilyError("negative twin leaf count at " + std::to_string(v));
        if (count > 0) pend.push_back({v, count});
    }
    return as_tree(add_pendants(t.graph(), pend));
}

Tree strip_twin_leaves(const Tree& t) {
    if (t.order() <= 2) return t;
    std::vector<bool> drop(t.order(), false);
    std::vector<bool> kept_one(t.order(), false);
    for (Vertex leaf : t.leaves()) {
        Vertex s = t.neighbors(leaf).front();
        if (kept_one[s]) drop[leaf] = true;
        kept_one[s] = true;
    }
    VertexSet keep;
    for (Vertex v = 0; v < t.order(); ++v)
        if (!drop[v]) keep.push_back(v);
    return as_tree(induced_subgraph(t.graph(), keep));
}

} // namespace kiso
