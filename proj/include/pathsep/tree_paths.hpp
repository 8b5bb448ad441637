#pragma once

#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

/// Partition of a rooted tree's vertices into vertex-disjoint subpaths of
/// root-leaf paths.  paths[i] runs top-down; owner maps each vertex to its
/// path; leaf_rep[i] is a leaf whose root path contains paths[i].
struct CaterpillarDecomposition {
    std::vector<std::vector<Vertex>> paths;
    std::vector<int> owner;
    std::vector<Vertex> leaf_rep;

    int num_paths() const { return static_cast<int>(paths.size()); }
};

/// The unique tree path from the root to v, as a vertex sequence r..v.
std::vector<Vertex> root_leaf_path(const RootedSPTree& tree, Vertex v);

/// Heavy-path decomposition: at each vertex the child with the largest
/// subtree continues the current path (ties to the smallest child id), so
/// every root-leaf path crosses at most floor(log2 n) + 1 paths.
CaterpillarDecomposition caterpillar_decomposition(const RootedSPTree& tree);

/// Number of distinct decomposition paths intersecting the root path of u.
int crossing_count(const CaterpillarDecomposition& d, const RootedSPTree& tree, Vertex u);

/// Crossing counts for every vertex at once (one tree walk).
std::vector<int> crossing_counts_all(const CaterpillarDecomposition& d, const RootedSPTree& tree);

}  // namespace pathsep
