#pragma once

#include <vector>

#include "pathsep/graph.hpp"
#include "pathsep/tree_paths.hpp"

namespace pathsep {

/// Auxiliary graph on the paths of a caterpillar decomposition: nodes i,j
/// are adjacent iff some graph edge joins V(P_i) and V(P_j); node_weight(i)
/// is the total vertex weight of P_i; expansion maps nodes back to vertex
/// sets, which partition V(G).
struct QuotientGraph {
    std::vector<std::pair<int, int>> edges;  // sorted, deduplicated, i < j
    std::vector<std::vector<int>> adj;
    std::vector<double> node_weight;
    std::vector<std::vector<Vertex>> expansion;

    int num_nodes() const { return static_cast<int>(node_weight.size()); }
    double total_weight() const;
};

struct SeparatorResult {
    std::vector<int> chosen;  // quotient node ids, sorted ascending
    double alpha = 0.0;
    double achieved_balance = 0.0;  // max component weight fraction after removal
};

QuotientGraph build_quotient_graph(const Graph& g, const CaterpillarDecomposition& d,
                                   const std::vector<double>& vertex_weights);

/// Max component weight of Q minus `removed`, as a fraction of Q's total
/// weight (0 when nothing remains).  Zero total weight yields 0.
double quotient_balance(const QuotientGraph& q, const std::vector<int>& removed);

bool quotient_is_alpha_balanced(const QuotientGraph& q, const std::vector<int>& removed,
                                double alpha);

/// Minimum-cardinality alpha-balanced node separator by subset enumeration;
/// ties broken by lexicographically smallest index set.  n <= 20 nodes.
SeparatorResult separator_exact(const QuotientGraph& q, double alpha);

/// BFS-layer sweep: repeatedly split the heaviest violating component by
/// removing a BFS layer grown from its maximum-weight node, then prune the
/// chosen set to inclusion-minimality in reverse insertion order.
SeparatorResult separator_heuristic(const QuotientGraph& q, double alpha);

enum class SeparatorSolver { Auto, Exact, Heuristic };

/// Lemma-style approximate path separator: caterpillar-decomposes T, solves
/// the balanced-separator problem on the quotient graph (exact when it has
/// at most 20 nodes, BFS-layer heuristic otherwise), and lifts each chosen
/// path to its representative leaf.  Removing the root paths of the
/// returned leaves leaves every component with weight <= alpha * w(V(G)).
std::vector<Vertex> approximate_path_separator(const Graph& g, const RootedSPTree& tree,
                                               const std::vector<double>& vertex_weights,
                                               double alpha = 0.75,
                                               SeparatorSolver solver = SeparatorSolver::Auto);

/// Max component weight fraction of G after deleting `removed_mask`
/// vertices; the checker behind every separator contract.
double balance_after_removal(const Graph& g, const std::vector<double>& vertex_weights,
                             const std::vector<char>& removed_mask);

/// Union of root paths T(u), u in `roots`, as a removal mask.
std::vector<char> root_paths_mask(const RootedSPTree& tree, const std::vector<Vertex>& roots);

}  // namespace pathsep
