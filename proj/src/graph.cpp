#include "pathsep/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "pathsep/errors.hpp"

namespace pathsep {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw ContractViolation("vertex count >= 0");
    adj_.resize(static_cast<std::size_t>(n));
    weights_.assign(static_cast<std::size_t>(n), 1.0);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw ContractViolation("vertex in range",
                                "vertex " + std::to_string(v) + " not in [0," + std::to_string(n_) + ")");
}

void Graph::add_edge(Vertex u, Vertex v, double length) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ContractViolation("no self-loops", "at vertex " + std::to_string(u));
    if (!(length >= 0.0))
        throw ContractViolation("edge length >= 0",
                                "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (has_edge(u, v))
        throw ContractViolation("at most one edge per vertex pair",
                                "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v, length});
    adj_[static_cast<std::size_t>(u)].emplace_back(v, length);
    adj_[static_cast<std::size_t>(v)].emplace_back(u, length);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::any_of(nb.begin(), nb.end(), [v](const auto& p) { return p.first == v; });
}

double Graph::edge_length(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    for (const auto& [w, len] : adj_[static_cast<std::size_t>(u)])
        if (w == v) return len;
    throw ContractViolation("edge exists",
                            "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
}

void Graph::set_vertex_weight(Vertex v, double w) {
    check_vertex(v);
    if (!(w >= 0.0)) throw ContractViolation("vertex weight >= 0", "at vertex " + std::to_string(v));
    weights_[static_cast<std::size_t>(v)] = w;
}

double Graph::total_weight() const {
    double total = 0.0;
    for (double w : weights_) total += w;
    return total;
}

bool Graph::has_nonuniform_weights() const {
    return std::any_of(weights_.begin(), weights_.end(), [](double w) { return w != 1.0; });
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    return connected_components(g, std::vector<char>(static_cast<std::size_t>(g.num_vertices()), 0));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<char>& removed) {
    const int n = g.num_vertices();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> parts;
    for (Vertex start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)] || removed[static_cast<std::size_t>(start)]) continue;
        std::vector<Vertex> part;
        std::queue<Vertex> queue;
        queue.push(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop();
            part.push_back(v);
            for (const auto& [w, len] : g.neighbors(v)) {
                (void)len;
                if (seen[static_cast<std::size_t>(w)] || removed[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push(w);
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

bool is_connected(const Graph& g) {
    if (g.num_vertices() == 0) return true;
    return connected_components(g).size() == 1;
}

namespace {

struct QueueEntry {
    double dist;
    Vertex v;
    bool operator>(const QueueEntry& o) const {
        if (dist != o.dist) return dist > o.dist;
        return v > o.v;
    }
};

}  // namespace

std::vector<double> single_source_distances(const Graph& g, Vertex source) {
    const int n = g.num_vertices();
    if (source < 0 || source >= n) throw ContractViolation("valid root", std::to_string(source));
    std::vector<double> dist(static_cast<std::size_t>(n), kInfDist);
    std::vector<char> settled(static_cast<std::size_t>(n), 0);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> heap;
    dist[static_cast<std::size_t>(source)] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (settled[static_cast<std::size_t>(v)]) continue;
        settled[static_cast<std::size_t>(v)] = 1;
        for (const auto& [w, len] : g.neighbors(v)) {
            const double cand = d + len;
            if (cand < dist[static_cast<std::size_t>(w)]) {
                dist[static_cast<std::size_t>(w)] = cand;
                heap.push({cand, w});
            }
        }
    }
    return dist;
}

RootedSPTree shortest_path_tree(const Graph& g, Vertex root) {
    const int n = g.num_vertices();
    if (root < 0 || root >= n) throw ContractViolation("valid root", std::to_string(root));

    // Settle order from a heap keyed (dist, id) makes the run deterministic;
    // parents are then chosen among tight, earlier-settled neighbors so the
    // links always point toward the root even across zero-length edges.
    std::vector<double> dist(static_cast<std::size_t>(n), kInfDist);
    std::vector<int> order(static_cast<std::size_t>(n), -1);
    std::vector<char> settled(static_cast<std::size_t>(n), 0);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> heap;
    dist[static_cast<std::size_t>(root)] = 0.0;
    heap.push({0.0, root});
    int next_order = 0;
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (settled[static_cast<std::size_t>(v)]) continue;
        settled[static_cast<std::size_t>(v)] = 1;
        order[static_cast<std::size_t>(v)] = next_order++;
        for (const auto& [w, len] : g.neighbors(v)) {
            const double cand = d + len;
            if (cand < dist[static_cast<std::size_t>(w)]) {
                dist[static_cast<std::size_t>(w)] = cand;
                heap.push({cand, w});
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!settled[static_cast<std::size_t>(v)])
            throw ContractViolation("graph connected", "vertex " + std::to_string(v) + " unreachable");

    RootedSPTree tree;
    tree.root = root;
    tree.dist = dist;
    tree.parent.assign(static_cast<std::size_t>(n), -1);
    tree.parent[static_cast<std::size_t>(root)] = root;
    for (Vertex v = 0; v < n; ++v) {
        if (v == root) continue;
        Vertex best = -1;
        for (const auto& [u, len] : g.neighbors(v)) {
            if (order[static_cast<std::size_t>(u)] >= order[static_cast<std::size_t>(v)]) continue;
            if (std::abs(dist[static_cast<std::size_t>(u)] + len - dist[static_cast<std::size_t>(v)]) > kTol)
                continue;
            if (best == -1 || u < best) best = u;
        }
        if (best == -1)
            throw ContractViolation("shortest-path tree parent exists", std::to_string(v));
        tree.parent[static_cast<std::size_t>(v)] = best;
    }
    return tree;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.num_vertices();
    DistanceMatrix matrix(n);
    for (Vertex s = 0; s < n; ++s) {
        const auto dist = single_source_distances(g, s);
        for (Vertex t = 0; t < n; ++t) matrix.at(s, t) = dist[static_cast<std::size_t>(t)];
    }
    return matrix;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<int> index(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vertex v = vertices[i];
        if (v < 0 || v >= g.num_vertices()) throw ContractViolation("vertex in range", std::to_string(v));
        if (index[static_cast<std::size_t>(v)] != -1)
            throw ContractViolation("distinct vertices", std::to_string(v));
        index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    Graph sub(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        sub.set_vertex_weight(static_cast<Vertex>(i), g.vertex_weight(vertices[i]));
    for (const Edge& e : g.edges()) {
        const int iu = index[static_cast<std::size_t>(e.u)];
        const int iv = index[static_cast<std::size_t>(e.v)];
        if (iu != -1 && iv != -1) sub.add_edge(iu, iv, e.length);
    }
    return sub;
}

std::vector<Vertex> root_path_vertices(const RootedSPTree& tree, Vertex v) {
    if (v < 0 || v >= tree.size()) throw ContractViolation("vertex in tree", std::to_string(v));
    std::vector<Vertex> path;
    Vertex cur = v;
    path.push_back(cur);
    while (cur != tree.root) {
        cur = tree.parent[static_cast<std::size_t>(cur)];
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

double path_length(const Graph& g, const std::vector<Vertex>& path) {
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) total += g.edge_length(path[i - 1], path[i]);
    return total;
}

}  // namespace pathsep
