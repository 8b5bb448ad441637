#pragma once

#include <optional>
#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

enum class KuratowskiKind { K33, K5 };

/// A forbidden-subdivision certificate: `branch` vertices play the role of
/// the K5 / K3,3 vertices (for K3,3 the first three form one side), and
/// paths[i] is the internally-disjoint branch-to-branch path realizing the
/// i-th required pair.
struct KuratowskiWitness {
    KuratowskiKind kind;
    std::vector<Vertex> branch;
    std::vector<std::vector<Vertex>> paths;

    /// All vertices of the subdivision, sorted ascending.
    std::vector<Vertex> vertices() const;
};

struct PlanarityVerdict {
    bool planar = true;
    std::optional<KuratowskiWitness> witness;
};

/// Exact planarity test, deterministic, polynomial worst case.  For
/// disconnected inputs the verdict is the conjunction over components.
/// A witness is attached for non-planar graphs with n <= 10.
PlanarityVerdict is_planar(const Graph& g);

/// Exhaustive search for a K5 or K3,3 subdivision (K3,3 tried first);
/// decides planarity by Kuratowski's theorem.  Test oracle, n <= 10 only.
PlanarityVerdict kuratowski_oracle_small(const Graph& g);

}  // namespace pathsep
