#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

/// Metadata for a generated family instance.  genus_claim records the known
/// genus; provenance says how the claim is justified (only claims backed by
/// a local oracle are used in hard test assertions).
struct FamilySpec {
    std::string family;
    std::vector<long> parameters;
    int genus_claim = 0;
    std::string provenance;
};

/// Cm x Ck torus grid, unit lengths; genus exactly 1.  Requires m,k >= 3.
Graph toroidal_grid(int m, int k);
FamilySpec toroidal_grid_spec(int m, int k);

/// g toroidal grids linked in a path by unit bridges (vertex 0 of block i
/// to vertex 0 of block i+1); genus exactly g by block additivity.
Graph genus_chain(int g, int m, int k);
FamilySpec genus_chain_spec(int g, int m, int k);

/// K_n with unit lengths.  genus_claim is ceil((n-3)(n-4)/12) for n >= 3.
Graph complete_graph(int n);
FamilySpec complete_graph_spec(int n);

/// m x k rectangular grid, unit lengths; planar.
Graph planar_grid(int m, int k);
FamilySpec planar_grid_spec(int m, int k);

/// Copy of g with edge lengths redrawn uniformly from [lo, hi],
/// deterministic per seed.  Vertex weights are preserved.
Graph random_lengths(const Graph& g, std::uint64_t seed, double lo, double hi);

}  // namespace pathsep
