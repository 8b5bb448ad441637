#include "pathsep/tree_paths.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pathsep/errors.hpp"

namespace pathsep {

std::vector<Vertex> root_leaf_path(const RootedSPTree& tree, Vertex v) {
    return root_path_vertices(tree, v);
}

namespace {

std::vector<std::vector<Vertex>> children_lists(const RootedSPTree& tree) {
    const int n = tree.size();
    std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        if (v == tree.root) continue;
        const Vertex p = tree.parent[static_cast<std::size_t>(v)];
        if (p < 0 || p >= n) throw ContractViolation("parent links valid", std::to_string(v));
        children[static_cast<std::size_t>(p)].push_back(v);
    }
    for (auto& c : children) std::sort(c.begin(), c.end());
    return children;
}

// Subtree sizes by processing vertices deepest-first.
std::vector<int> subtree_sizes(const RootedSPTree& tree,
                               const std::vector<std::vector<Vertex>>& children) {
    const int n = tree.size();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> by_depth;
    by_depth.reserve(static_cast<std::size_t>(n));
    depth[static_cast<std::size_t>(tree.root)] = 0;
    std::deque<Vertex> queue = {tree.root};
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        by_depth.push_back(v);
        for (Vertex c : children[static_cast<std::size_t>(v)]) {
            if (depth[static_cast<std::size_t>(c)] != -1)
                throw ContractViolation("parent links form a tree", std::to_string(c));
            depth[static_cast<std::size_t>(c)] = depth[static_cast<std::size_t>(v)] + 1;
            queue.push_back(c);
        }
    }
    if (static_cast<int>(by_depth.size()) != n)
        throw ContractViolation("parent links form a tree", "unreachable vertices present");
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    for (auto it = by_depth.rbegin(); it != by_depth.rend(); ++it)
        for (Vertex c : children[static_cast<std::size_t>(*it)])
            size[static_cast<std::size_t>(*it)] += size[static_cast<std::size_t>(c)];
    return size;
}

}  // namespace

CaterpillarDecomposition caterpillar_decomposition(const RootedSPTree& tree) {
    const int n = tree.size();
    if (n < 1) throw ContractViolation("tree spans >= 1 vertex");
    const auto children = children_lists(tree);
    const auto size = subtree_sizes(tree, children);

    std::vector<Vertex> heavy(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        int best = 0;
        for (Vertex c : children[static_cast<std::size_t>(v)]) {
            if (size[static_cast<std::size_t>(c)] > best) {
                best = size[static_cast<std::size_t>(c)];
                heavy[static_cast<std::size_t>(v)] = c;  // ties keep the smallest id
            }
        }
    }

    CaterpillarDecomposition d;
    d.owner.assign(static_cast<std::size_t>(n), -1);
    // Heads in BFS order: the root first, then light children top-down.
    std::deque<Vertex> heads = {tree.root};
    while (!heads.empty()) {
        const Vertex head = heads.front();
        heads.pop_front();
        const int index = d.num_paths();
        std::vector<Vertex> path;
        Vertex v = head;
        while (true) {
            path.push_back(v);
            d.owner[static_cast<std::size_t>(v)] = index;
            for (Vertex c : children[static_cast<std::size_t>(v)])
                if (c != heavy[static_cast<std::size_t>(v)]) heads.push_back(c);
            if (heavy[static_cast<std::size_t>(v)] == -1) break;
            v = heavy[static_cast<std::size_t>(v)];
        }
        d.leaf_rep.push_back(path.back());
        d.paths.push_back(std::move(path));
    }
    return d;
}

int crossing_count(const CaterpillarDecomposition& d, const RootedSPTree& tree, Vertex u) {
    const auto path = root_path_vertices(tree, u);
    int count = 1;
    for (std::size_t i = 1; i < path.size(); ++i)
        if (d.owner[static_cast<std::size_t>(path[i])] != d.owner[static_cast<std::size_t>(path[i - 1])])
            ++count;
    return count;
}

std::vector<int> crossing_counts_all(const CaterpillarDecomposition& d, const RootedSPTree& tree) {
    const int n = tree.size();
    const auto children = children_lists(tree);
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    std::deque<Vertex> queue = {tree.root};
    counts[static_cast<std::size_t>(tree.root)] = 1;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex c : children[static_cast<std::size_t>(v)]) {
            counts[static_cast<std::size_t>(c)] =
                counts[static_cast<std::size_t>(v)] +
                (d.owner[static_cast<std::size_t>(c)] != d.owner[static_cast<std::size_t>(v)] ? 1 : 0);
            queue.push_back(c);
        }
    }
    return counts;
}

}  // namespace pathsep
