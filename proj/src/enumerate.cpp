#include "kiso/enumerate.hpp"

#include <algorithm>
#include <string>

#include "kiso/errors.hpp"

namespace kiso {

namespace {

using Layout = std::vector<int>;

// Beyer-Hedetniemi successor of a canonical rooted level sequence, starting
// the scan at position p (or at the last non-1 entry when p < 0).
std::optional<Layout> next_rooted(const Layout& pred, int p = -1) {
    if (p < 0) {
        p = static_cast<int>(pred.size()) - 1;
        while (pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    int q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    Layout out = pred;
    for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
    return out;
}

// Splits into (left subtree of the root, tree with that subtree removed),
// both as level sequences rooted at depth 0.
std::pair<Layout, Layout> split(const Layout& layout) {
    std::size_t m = layout.size();
    bool seen = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] != 1) continue;
        if (seen) {
            m = i;
            break;
        }
        seen = true;
    }
    Layout left, rest{0};
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {left, rest};
}

bool is_free_canonical(const Layout& layout) {
    auto [left, rest] = split(layout);
    int lh = *std::max_element(left.begin(), left.end());
    int rh = *std::max_element(rest.begin(), rest.end());
    if (rh < lh) return false;
    if (rh == lh) {
        if (left.size() > rest.size()) return false;
        if (left.size() == rest.size() && left > rest) return false;
    }
    return true;
}

// One WROM step: the candidate itself if canonical, otherwise the jump target.
std::optional<Layout> next_free(const Layout& cand) {
    if (is_free_canonical(cand)) return cand;
    auto [left, rest] = split(cand);
    const int p = static_cast<int>(left.size());
    auto jumped = next_rooted(cand, p);
    if (!jumped) return std::nullopt;
    if (cand[p] > 2) {
        auto [new_left, new_rest] = split(*jumped);
        int h = *std::max_element(new_left.begin(), new_left.end());
        const std::size_t len = h + 1;
        for (std::size_t i = 0; i < len; ++i) (*jumped)[jumped->size() - len + i] = static_cast<int>(i) + 1;
    }
    return jumped;
}

} // namespace

Tree tree_from_level_sequence(const std::vector<int>& levels) {
    std::vector<Edge> edges;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(levels.size()); ++i) {
        while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
        if (!stack.empty()) edges.emplace_back(stack.back(), i);
        stack.push_back(i);
    }
    return as_tree(build_graph(static_cast<int>(levels.size()), edges));
}

FreeTreeStream::FreeTreeStream(int n) : n_(n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw PreconditionError("free-tree enumeration needs 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
    if (n >= 2) {
        // The path rooted at its center.
        for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
        for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
    }
}

std::optional<Tree> FreeTreeStream::next() {
    if (done_) return std::nullopt;
    if (n_ == 1) {
        done_ = true;
        return as_tree(build_graph(1, {}));
    }
    if (!first_) {
        auto succ = next_rooted(layout_);
        if (!succ) {
            done_ = true;
            return std::nullopt;
        }
        layout_ = std::move(*succ);
    }
    first_ = false;
    // A jump can land on another non-canonical rooting; keep stepping.
    for (;;) {
        auto cand = next_free(layout_);
        if (!cand) {
            done_ = true;
            return std::nullopt;
        }
        bool landed = (*cand == layout_);
        layout_ = std::move(*cand);
        if (landed || is_free_canonical(layout_)) break;
    }
    return tree_from_level_sequence(layout_);
}

void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn) {
    FreeTreeStream stream(n);
    while (auto t = stream.next()) fn(*t);
}

std::vector<Tree> enumerate_free_trees(int n) {
    std::vector<Tree> out;
    for_each_free_tree(n, [&](const Tree& t) { out.push_back(t); });
    return out;
}

} // namespace kiso
