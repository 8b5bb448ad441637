#pragma once

#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

/// One planarization round: the non-planar components encountered (their
/// sizes, in discovery order) and the separator size |Z_C| chosen for each.
struct IterationRecord {
    std::vector<int> component_sizes;
    std::vector<int> separator_sizes;
};

struct PlanarizationResult {
    Vertex root = 0;
    std::vector<Vertex> path_roots;  // X, sorted
    std::vector<IterationRecord> iterations;
    std::vector<Vertex> removed;  // union of V(T(v)), v in X, sorted
    bool remainder_planar = false;
};

/// Connected components of G minus `removed` that fail is_planar.
std::vector<std::vector<Vertex>> nonplanar_components(const Graph& g,
                                                      const std::vector<Vertex>& removed);

/// Recursively separates non-planar components with 3/4-balanced path
/// separators (indicator weights per component, always against the original
/// G and its shortest-path tree from r) until the remainder is planar.
/// Planar inputs return an empty X and zero iterations.
PlanarizationResult planarizing_path_roots(const Graph& g, Vertex root);

}  // namespace pathsep
