#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kiso/graph.hpp"

namespace kiso {

constexpr int kMaxEnumerationOrder = 20;

// Single-consumer stream of free trees of order n, one per isomorphism class.
//
// Trees come from canonical level sequences (Wright, Richmond, Odlyzko and
// McKay), stepping rooted trees with the Beyer-Hedetniemi successor and
// skipping non-canonical rootings. Constant amortized time per tree.
class FreeTreeStream {
public:
    explicit FreeTreeStream(int n);
    std::optional<Tree> next();

private:
    int n_;
    bool done_ = false;
    bool first_ = true;
    std::vector<int> layout_;
};

// Requires 1 <= n <= 20; throws PreconditionError otherwise.
std::vector<Tree> enumerate_free_trees(int n);
void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn);

// Builds the tree described by a level sequence (depths in preorder).
Tree tree_from_level_sequence(const std::vector<int>& levels);

} // namespace kiso
