#include <doctest.h>

#include <cmath>
#include <set>

#include "pathsep/tree_paths.hpp"
#include "support/oracles.hpp"

using namespace pathsep;
using namespace pathsep::testing;

namespace {

RootedSPTree from_parents(std::vector<Vertex> parents, Vertex root) {
    RootedSPTree tree;
    tree.root = root;
    tree.parent = std::move(parents);
    tree.dist.assign(tree.parent.size(), 0.0);
    return tree;
}

int crossing_bound(int n) { return static_cast<int>(std::floor(std::log2(n))) + 1; }

void check_decomposition(const RootedSPTree& tree, const CaterpillarDecomposition& d) {
    const int n = tree.size();
    // Disjointness + coverage via the owner map.
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < d.num_paths(); ++i)
        for (Vertex v : d.paths[static_cast<std::size_t>(i)]) {
            CHECK(d.owner[static_cast<std::size_t>(v)] == i);
            CHECK(++seen[static_cast<std::size_t>(v)] == 1);
        }
    for (Vertex v = 0; v < n; ++v) CHECK(seen[static_cast<std::size_t>(v)] == 1);

    // Each path is a contiguous top-down chain, contained in the root path
    // of its representative leaf, and that representative is a leaf.
    std::vector<char> is_parent(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        if (v != tree.root) is_parent[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(v)])] = 1;
    for (int i = 0; i < d.num_paths(); ++i) {
        const auto& path = d.paths[static_cast<std::size_t>(i)];
        REQUIRE(!path.empty());
        for (std::size_t j = 1; j < path.size(); ++j)
            CHECK(tree.parent[static_cast<std::size_t>(path[j])] == path[j - 1]);
        const Vertex rep = d.leaf_rep[static_cast<std::size_t>(i)];
        CHECK_FALSE(is_parent[static_cast<std::size_t>(rep)]);
        const auto rep_path = root_leaf_path(tree, rep);
        const std::set<Vertex> on_rep(rep_path.begin(), rep_path.end());
        for (Vertex v : path) CHECK(on_rep.contains(v));
    }
}

}  // namespace

TEST_CASE("root_leaf_path on the documented examples") {
    const auto path_tree = from_parents({0, 0, 1}, 0);
    CHECK(root_leaf_path(path_tree, 0) == std::vector<Vertex>{0});
    CHECK(root_leaf_path(path_tree, 2) == std::vector<Vertex>{0, 1, 2});

    const auto star = from_parents({0, 0, 0, 0}, 0);
    CHECK(root_leaf_path(star, 3) == std::vector<Vertex>{0, 3});
}

TEST_CASE("caterpillar decomposition of a single path is the path") {
    const auto tree = from_parents({0, 0, 1, 2}, 0);
    const auto d = caterpillar_decomposition(tree);
    CHECK(d.num_paths() == 1);
    CHECK(d.paths[0] == std::vector<Vertex>{0, 1, 2, 3});
    for (Vertex u : {0, 1, 2, 3}) CHECK(crossing_count(d, tree, u) == 1);
    check_decomposition(tree, d);
}

TEST_CASE("caterpillar decomposition of the star K1,3") {
    // Center 0 with children 1,2,3; heavy-child rule with index tie-break.
    const auto tree = from_parents({0, 0, 0, 0}, 0);
    const auto d = caterpillar_decomposition(tree);
    REQUIRE(d.num_paths() == 3);
    CHECK(d.paths[0] == std::vector<Vertex>{0, 1});
    CHECK(d.paths[1] == std::vector<Vertex>{2});
    CHECK(d.paths[2] == std::vector<Vertex>{3});
    CHECK(d.leaf_rep == std::vector<Vertex>{1, 2, 3});
    CHECK(crossing_count(d, tree, 2) == 2);
    CHECK(crossing_count(d, tree, 0) == 1);
    CHECK(crossing_bound(4) == 3);
    check_decomposition(tree, d);
}

TEST_CASE("complete binary tree of depth 5 stays within the crossing bound") {
    const int n = 63;
    std::vector<Vertex> parents(n);
    parents[0] = 0;
    for (Vertex v = 1; v < n; ++v) parents[static_cast<std::size_t>(v)] = (v - 1) / 2;
    const auto tree = from_parents(parents, 0);
    const auto d = caterpillar_decomposition(tree);
    check_decomposition(tree, d);
    const auto counts = crossing_counts_all(d, tree);
    for (Vertex v = 0; v < n; ++v) {
        CHECK(counts[static_cast<std::size_t>(v)] <= 6);
        CHECK(counts[static_cast<std::size_t>(v)] == crossing_count(d, tree, v));
    }
}

TEST_CASE("single-vertex tree") {
    const auto tree = from_parents({0}, 0);
    const auto d = caterpillar_decomposition(tree);
    CHECK(d.num_paths() == 1);
    CHECK(d.paths[0] == std::vector<Vertex>{0});
    CHECK(d.leaf_rep[0] == 0);
}

TEST_CASE("crossing bound holds on random trees of every shape") {
    SplitMix64 rng(41);
    for (const auto shape : {TreeShape::Attachment, TreeShape::Path, TreeShape::Star,
                             TreeShape::Caterpillar, TreeShape::Binary}) {
        for (int trial = 0; trial < 8; ++trial) {
            const int n = 2 + static_cast<int>(rng.next_below(2000));
            const auto tree = random_tree(rng, n, shape);
            const auto d = caterpillar_decomposition(tree);
            check_decomposition(tree, d);
            const auto counts = crossing_counts_all(d, tree);
            const int bound = crossing_bound(n);
            for (Vertex v = 0; v < n; ++v)
                CHECK(counts[static_cast<std::size_t>(v)] <= bound);
        }
    }
}
