#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pathsep/errors.hpp"

namespace pathsep::testing {

Graph make_graph(int n, std::initializer_list<std::tuple<int, int, double>> edges) {
    Graph g(n);
    for (const auto& [u, v, len] : edges) g.add_edge(u, v, len);
    return g;
}

DistanceMatrix bellman_ford_apsp(const Graph& g) {
    const int n = g.num_vertices();
    DistanceMatrix matrix(n);
    for (Vertex s = 0; s < n; ++s) {
        std::vector<double> dist(static_cast<std::size_t>(n), kInfDist);
        dist[static_cast<std::size_t>(s)] = 0.0;
        for (int round = 0; round + 1 < n; ++round) {
            bool changed = false;
            for (const Edge& e : g.edges()) {
                const double du = dist[static_cast<std::size_t>(e.u)];
                const double dv = dist[static_cast<std::size_t>(e.v)];
                if (du + e.length < dv) {
                    dist[static_cast<std::size_t>(e.v)] = du + e.length;
                    changed = true;
                }
                if (dv + e.length < du) {
                    dist[static_cast<std::size_t>(e.u)] = dv + e.length;
                    changed = true;
                }
            }
            if (!changed) break;
        }
        for (Vertex t = 0; t < n; ++t) matrix.at(s, t) = dist[static_cast<std::size_t>(t)];
    }
    return matrix;
}

namespace {

void enumerate_paths(const Graph& g, Vertex at, Vertex t, std::vector<char>& used, double so_far,
                     double& best) {
    if (at == t) {
        best = std::min(best, so_far);
        return;
    }
    if (so_far >= best) return;
    for (const auto& [w, len] : g.neighbors(at)) {
        if (used[static_cast<std::size_t>(w)]) continue;
        used[static_cast<std::size_t>(w)] = 1;
        enumerate_paths(g, w, t, used, so_far + len, best);
        used[static_cast<std::size_t>(w)] = 0;
    }
}

}  // namespace

double brute_force_shortest_path(const Graph& g, Vertex s, Vertex t) {
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
    used[static_cast<std::size_t>(s)] = 1;
    double best = kInfDist;
    enumerate_paths(g, s, t, used, 0.0, best);
    return best;
}

BruteForceSeparator brute_force_min_separator(const std::vector<double>& node_weight,
                                              const std::vector<std::pair<int, int>>& edges,
                                              double alpha) {
    const int k = static_cast<int>(node_weight.size());
    if (k > 22) throw std::invalid_argument("too many nodes for brute force");
    double total = 0.0;
    for (double w : node_weight) total += w;
    const double budget = alpha * total + kTol;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }

    const auto feasible = [&](std::uint32_t mask) {
        std::vector<char> seen(static_cast<std::size_t>(k), 0);
        for (int start = 0; start < k; ++start) {
            if (seen[static_cast<std::size_t>(start)] || (mask >> start) & 1U) continue;
            double weight = 0.0;
            std::vector<int> stack = {start};
            seen[static_cast<std::size_t>(start)] = 1;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                weight += node_weight[static_cast<std::size_t>(v)];
                for (int w : adj[static_cast<std::size_t>(v)])
                    if (!seen[static_cast<std::size_t>(w)] && !((mask >> w) & 1U)) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        stack.push_back(w);
                    }
            }
            if (weight > budget) return false;
        }
        return true;
    };

    std::optional<std::uint32_t> best;
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
        if (!feasible(mask)) continue;
        if (!best) {
            best = mask;
            continue;
        }
        const int a = __builtin_popcount(mask);
        const int b = __builtin_popcount(*best);
        if (a < b) best = mask;
        // Among equal sizes keep the lexicographically smallest index set:
        // the earlier mask in increasing numeric order of "reversed" bits is
        // not simply comparable, so compare index sequences directly.
        else if (a == b) {
            std::vector<int> xs, ys;
            for (int i = 0; i < k; ++i) {
                if ((mask >> i) & 1U) xs.push_back(i);
                if ((*best >> i) & 1U) ys.push_back(i);
            }
            if (xs < ys) best = mask;
        }
    }
    BruteForceSeparator result;
    for (int i = 0; i < k; ++i)
        if ((*best >> i) & 1U) result.nodes.push_back(i);
    // Recompute the achieved balance for reporting.
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    double worst = 0.0;
    for (int start = 0; start < k; ++start) {
        if (seen[static_cast<std::size_t>(start)] || (*best >> start) & 1U) continue;
        double weight = 0.0;
        std::vector<int> stack = {start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            weight += node_weight[static_cast<std::size_t>(v)];
            for (int w : adj[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)] && !((*best >> w) & 1U)) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        worst = std::max(worst, weight);
    }
    result.balance = total > 0.0 ? worst / total : 0.0;
    return result;
}

bool witness_is_valid(const Graph& g, const KuratowskiWitness& witness) {
    const std::size_t branch_count = witness.kind == KuratowskiKind::K5 ? 5 : 6;
    const std::size_t path_count = witness.kind == KuratowskiKind::K5 ? 10 : 9;
    if (witness.branch.size() != branch_count || witness.paths.size() != path_count) return false;
    std::set<Vertex> branch(witness.branch.begin(), witness.branch.end());
    if (branch.size() != branch_count) return false;

    // Expected endpoint pairs, in the library's fixed order.
    std::vector<std::pair<Vertex, Vertex>> expected;
    if (witness.kind == KuratowskiKind::K5) {
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                expected.emplace_back(witness.branch[static_cast<std::size_t>(a)],
                                      witness.branch[static_cast<std::size_t>(b)]);
    } else {
        for (int l = 0; l < 3; ++l)
            for (int r = 3; r < 6; ++r)
                expected.emplace_back(witness.branch[static_cast<std::size_t>(l)],
                                      witness.branch[static_cast<std::size_t>(r)]);
    }

    std::set<Vertex> interior_seen;
    for (std::size_t i = 0; i < path_count; ++i) {
        const auto& path = witness.paths[i];
        if (path.size() < 2) return false;
        if (path.front() != expected[i].first || path.back() != expected[i].second) return false;
        for (std::size_t j = 1; j < path.size(); ++j)
            if (!g.has_edge(path[j - 1], path[j])) return false;
        for (std::size_t j = 1; j + 1 < path.size(); ++j) {
            const Vertex v = path[j];
            if (branch.contains(v)) return false;
            if (!interior_seen.insert(v).second) return false;  // reused interior
        }
    }
    return true;
}

int face_count(const Graph& g, const RotationSystem& rotation) {
    // Darts are ordered pairs (u, v).  Arriving at v along (u, v), the face
    // continues along (v, w) where w follows u in v's rotation.
    std::map<std::pair<Vertex, Vertex>, char> visited;
    for (const Edge& e : g.edges()) {
        visited[{e.u, e.v}] = 0;
        visited[{e.v, e.u}] = 0;
    }
    const auto successor = [&](Vertex u, Vertex v) {
        const auto& rot = rotation[static_cast<std::size_t>(v)];
        const auto it = std::find(rot.begin(), rot.end(), u);
        if (it == rot.end()) throw std::invalid_argument("rotation misses an edge");
        const std::size_t pos = static_cast<std::size_t>(it - rot.begin());
        return rot[(pos + 1) % rot.size()];
    };
    int faces = 0;
    for (auto& [dart, seen] : visited) {
        if (seen) continue;
        ++faces;
        auto cur = dart;
        while (!visited[cur]) {
            visited[cur] = 1;
            const Vertex w = successor(cur.first, cur.second);
            cur = {cur.second, w};
        }
    }
    return faces;
}

int rotation_genus(const Graph& g, const RotationSystem& rotation) {
    const int f = face_count(g, rotation);
    const int euler = g.num_vertices() - g.num_edges() + f;
    return (2 - euler) / 2;
}

RotationSystem canonical_torus_rotation(int m, int k) {
    RotationSystem rotation(static_cast<std::size_t>(m) * static_cast<std::size_t>(k));
    const auto id = [k](int i, int j) { return i * k + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j)
            rotation[static_cast<std::size_t>(id(i, j))] = {
                id(i, (j + 1) % k),        // right
                id((i + 1) % m, j),        // down
                id(i, (j + k - 1) % k),    // left
                id((i + m - 1) % m, j)};   // up
    return rotation;
}

namespace {

// All cyclic orders of `items` with items[0] fixed first.
std::vector<std::vector<Vertex>> cyclic_orders(std::vector<Vertex> items) {
    std::vector<std::vector<Vertex>> orders;
    if (items.size() <= 1) return {items};
    std::vector<Vertex> rest(items.begin() + 1, items.end());
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<Vertex> order = {items.front()};
        order.insert(order.end(), rest.begin(), rest.end());
        orders.push_back(std::move(order));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return orders;
}

}  // namespace

int min_genus_exhaustive(const Graph& g, std::uint64_t max_systems) {
    const int n = g.num_vertices();
    std::vector<std::vector<std::vector<Vertex>>> choices;
    std::uint64_t total = 1;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> nbrs;
        for (const auto& [w, len] : g.neighbors(v)) {
            (void)len;
            nbrs.push_back(w);
        }
        std::sort(nbrs.begin(), nbrs.end());
        choices.push_back(cyclic_orders(nbrs));
        total *= choices.back().size();
        if (total > max_systems) throw std::invalid_argument("rotation search space too large");
    }
    int best = INT32_MAX;
    RotationSystem rotation(static_cast<std::size_t>(n));
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        for (Vertex v = 0; v < n; ++v)
            rotation[static_cast<std::size_t>(v)] =
                choices[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]];
        best = std::min(best, rotation_genus(g, rotation));
        int i = n - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] + 1 ==
                             choices[static_cast<std::size_t>(i)].size()) {
            pick[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
    }
    return best;
}

Graph random_graph(SplitMix64& rng, int n, double p) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.next_double() < p) g.add_edge(u, v, 1.0);
    return g;
}

Graph random_connected_graph(SplitMix64& rng, int n, int extra, bool integer_lengths) {
    Graph g(n);
    const auto draw_length = [&] {
        return integer_lengths ? 1.0 + static_cast<double>(rng.next_below(10))
                               : 0.5 + 1.5 * rng.next_double();
    };
    for (Vertex v = 1; v < n; ++v)
        g.add_edge(static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(v))), v,
                   draw_length());
    for (int i = 0; i < extra; ++i) {
        const Vertex u = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
        const Vertex v = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v, draw_length());
    }
    return g;
}

RootedSPTree random_tree(SplitMix64& rng, int n, TreeShape shape) {
    RootedSPTree tree;
    tree.root = 0;
    tree.parent.assign(static_cast<std::size_t>(n), 0);
    tree.dist.assign(static_cast<std::size_t>(n), 0.0);
    for (Vertex v = 1; v < n; ++v) {
        Vertex p = 0;
        switch (shape) {
            case TreeShape::Attachment:
                p = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(v)));
                break;
            case TreeShape::Path:
                p = v - 1;
                break;
            case TreeShape::Star:
                p = 0;
                break;
            case TreeShape::Caterpillar:
                // Even vertices form a spine, odd vertices hang off it.
                p = v % 2 == 0 ? v - 2 : v - 1;
                if (p < 0) p = 0;
                break;
            case TreeShape::Binary:
                p = (v - 1) / 2;
                break;
        }
        tree.parent[static_cast<std::size_t>(v)] = p;
        tree.dist[static_cast<std::size_t>(v)] = tree.dist[static_cast<std::size_t>(p)] + 1.0;
    }
    return tree;
}

std::vector<std::vector<Vertex>> canonical_partition(std::vector<std::vector<Vertex>> parts) {
    for (auto& part : parts) std::sort(part.begin(), part.end());
    std::sort(parts.begin(), parts.end());
    return parts;
}

}  // namespace pathsep::testing
