#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace pathsep {

using Vertex = int;

/// Absolute tolerance for distance/weight comparisons where equality matters.
/// Integer-valued inputs behave exactly under this policy.
inline constexpr double kTol = 1e-9;

inline constexpr double kInfDist = std::numeric_limits<double>::infinity();

struct Edge {
    Vertex u;  // u < v
    Vertex v;
    double length;
};

/// Undirected graph on dense vertex ids 0..n-1 with non-negative edge
/// lengths and non-negative vertex weights (default 1).  No self-loops,
/// at most one edge per vertex pair.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    /// Throws ContractViolation on self-loops, duplicate edges, negative
    /// lengths or out-of-range endpoints.
    void add_edge(Vertex u, Vertex v, double length);

    bool has_edge(Vertex u, Vertex v) const;
    /// Length of edge {u,v}; throws if the edge is absent.
    double edge_length(Vertex u, Vertex v) const;

    /// Edges in insertion order, endpoints normalized u < v.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Neighbors of v as (neighbor, length) pairs, in insertion order.
    std::span<const std::pair<Vertex, double>> neighbors(Vertex v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    void set_vertex_weight(Vertex v, double w);
    double vertex_weight(Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
    const std::vector<double>& vertex_weights() const { return weights_; }
    double total_weight() const;
    bool has_nonuniform_weights() const;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, double>>> adj_;
    std::vector<double> weights_;
};

/// Shortest-path tree rooted at `root`; parent[root] == root and dist[v]
/// is the exact graph distance from the root.
struct RootedSPTree {
    Vertex root = 0;
    std::vector<Vertex> parent;
    std::vector<double> dist;

    int size() const { return static_cast<int>(parent.size()); }
};

/// Symmetric all-pairs distance table; +inf across components.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n)
        : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInfDist) {}

    int size() const { return n_; }
    double operator()(Vertex u, Vertex v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }
    double& at(Vertex u, Vertex v) {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }

private:
    int n_ = 0;
    std::vector<double> d_;
};

/// Connected components as a partition of V(G).  Each part is sorted
/// ascending and parts are ordered by their smallest vertex, so the result
/// is invariant under the order edges were inserted.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Components of G with `removed[v] != 0` vertices deleted.  Removed
/// vertices appear in no part.
std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<char>& removed);

bool is_connected(const Graph& g);

/// Dijkstra distances from a single source; +inf for unreachable vertices.
std::vector<double> single_source_distances(const Graph& g, Vertex source);

/// Deterministic shortest-path tree: dist is exact, and among neighbors u
/// that are tight (dist(u) + len(u,v) == dist(v) within kTol) and settled
/// before v, the parent is the one with the smallest id.  Throws on
/// disconnected input or an invalid root.
RootedSPTree shortest_path_tree(const Graph& g, Vertex root);

/// Exact all-pairs distances by repeated single-source runs.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Subgraph induced on `vertices` (need not be sorted; duplicates rejected).
/// Vertex i of the result is vertices[i] of g; lengths and weights carry over.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

/// Vertices of the root path T(v) = r..v, walking parent links.
std::vector<Vertex> root_path_vertices(const RootedSPTree& tree, Vertex v);

/// Sum of edge lengths along a vertex sequence; every hop must be an edge.
double path_length(const Graph& g, const std::vector<Vertex>& path);

}  // namespace pathsep
