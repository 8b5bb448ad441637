#include "pathsep/separator.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "pathsep/errors.hpp"

namespace pathsep {

double QuotientGraph::total_weight() const {
    double total = 0.0;
    for (double w : node_weight) total += w;
    return total;
}

QuotientGraph build_quotient_graph(const Graph& g, const CaterpillarDecomposition& d,
                                   const std::vector<double>& vertex_weights) {
    const int n = g.num_vertices();
    if (static_cast<int>(d.owner.size()) != n)
        throw ContractViolation("decomposition covers V(G)",
                                "owner map has size " + std::to_string(d.owner.size()));
    for (Vertex v = 0; v < n; ++v)
        if (d.owner[static_cast<std::size_t>(v)] < 0 ||
            d.owner[static_cast<std::size_t>(v)] >= d.num_paths())
            throw ContractViolation("decomposition covers V(G)", "vertex " + std::to_string(v));
    if (static_cast<int>(vertex_weights.size()) != n)
        throw ContractViolation("weight vector matches V(G)");

    QuotientGraph q;
    const int k = d.num_paths();
    q.node_weight.assign(static_cast<std::size_t>(k), 0.0);
    q.expansion = d.paths;
    for (auto& part : q.expansion) std::sort(part.begin(), part.end());
    for (Vertex v = 0; v < n; ++v)
        q.node_weight[static_cast<std::size_t>(d.owner[static_cast<std::size_t>(v)])] +=
            vertex_weights[static_cast<std::size_t>(v)];

    std::set<std::pair<int, int>> edge_set;
    for (const Edge& e : g.edges()) {
        int a = d.owner[static_cast<std::size_t>(e.u)];
        int b = d.owner[static_cast<std::size_t>(e.v)];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        edge_set.emplace(a, b);
    }
    q.edges.assign(edge_set.begin(), edge_set.end());
    q.adj.resize(static_cast<std::size_t>(k));
    for (const auto& [a, b] : q.edges) {
        q.adj[static_cast<std::size_t>(a)].push_back(b);
        q.adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : q.adj) std::sort(nb.begin(), nb.end());
    return q;
}

namespace {

struct QuotientComponent {
    std::vector<int> nodes;  // sorted
    double weight = 0.0;
};

std::vector<QuotientComponent> quotient_components(const QuotientGraph& q,
                                                   const std::vector<char>& removed) {
    const int k = q.num_nodes();
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::vector<QuotientComponent> comps;
    for (int start = 0; start < k; ++start) {
        if (seen[static_cast<std::size_t>(start)] || removed[static_cast<std::size_t>(start)]) continue;
        QuotientComponent comp;
        std::queue<int> queue;
        queue.push(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            comp.nodes.push_back(v);
            comp.weight += q.node_weight[static_cast<std::size_t>(v)];
            for (int w : q.adj[static_cast<std::size_t>(v)]) {
                if (seen[static_cast<std::size_t>(w)] || removed[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push(w);
            }
        }
        std::sort(comp.nodes.begin(), comp.nodes.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<char> to_mask(int k, const std::vector<int>& nodes) {
    std::vector<char> mask(static_cast<std::size_t>(k), 0);
    for (int v : nodes) mask[static_cast<std::size_t>(v)] = 1;
    return mask;
}

double max_component_weight(const QuotientGraph& q, const std::vector<char>& removed) {
    double worst = 0.0;
    for (const auto& comp : quotient_components(q, removed)) worst = std::max(worst, comp.weight);
    return worst;
}

}  // namespace

double quotient_balance(const QuotientGraph& q, const std::vector<int>& removed) {
    const double total = q.total_weight();
    if (total <= 0.0) return 0.0;
    return max_component_weight(q, to_mask(q.num_nodes(), removed)) / total;
}

bool quotient_is_alpha_balanced(const QuotientGraph& q, const std::vector<int>& removed,
                                double alpha) {
    return max_component_weight(q, to_mask(q.num_nodes(), removed)) <=
           alpha * q.total_weight() + kTol;
}

SeparatorResult separator_exact(const QuotientGraph& q, double alpha) {
    const int k = q.num_nodes();
    if (k > 20)
        throw ContractViolation("separator_exact requires <= 20 nodes", std::to_string(k) + " nodes");
    const double budget = alpha * q.total_weight() + kTol;

    std::vector<char> mask(static_cast<std::size_t>(k), 0);
    std::vector<int> idx;
    // Subsets by cardinality, each cardinality in lexicographic order; the
    // first feasible subset is the minimum-cardinality, lexicographically
    // smallest solution.
    for (int size = 0; size <= k; ++size) {
        idx.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::fill(mask.begin(), mask.end(), 0);
            for (int i : idx) mask[static_cast<std::size_t>(i)] = 1;
            if (max_component_weight(q, mask) <= budget) {
                SeparatorResult result;
                result.chosen = idx;
                result.alpha = alpha;
                result.achieved_balance = quotient_balance(q, idx);
                return result;
            }
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    // Unreachable: removing every node is always alpha-balanced.
    throw ContractViolation("separator feasibility", "no subset found");
}

namespace {

// Pieces of a component after deleting one BFS layer, evaluated against the
// global weight budget.
struct LayerOutcome {
    bool all_feasible = true;
    double max_piece_weight = 0.0;
};

LayerOutcome evaluate_layer(const QuotientGraph& q, const std::vector<int>& comp_nodes,
                            const std::vector<char>& removed, const std::vector<char>& layer_mask,
                            double budget) {
    LayerOutcome outcome;
    std::set<int> comp(comp_nodes.begin(), comp_nodes.end());
    std::vector<char> seen(static_cast<std::size_t>(q.num_nodes()), 0);
    for (int start : comp_nodes) {
        if (seen[static_cast<std::size_t>(start)] || layer_mask[static_cast<std::size_t>(start)]) continue;
        double weight = 0.0;
        std::queue<int> queue;
        queue.push(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            weight += q.node_weight[static_cast<std::size_t>(v)];
            for (int w : q.adj[static_cast<std::size_t>(v)]) {
                if (seen[static_cast<std::size_t>(w)] || layer_mask[static_cast<std::size_t>(w)] ||
                    removed[static_cast<std::size_t>(w)] || !comp.contains(w))
                    continue;
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push(w);
            }
        }
        outcome.max_piece_weight = std::max(outcome.max_piece_weight, weight);
        if (weight > budget) outcome.all_feasible = false;
    }
    return outcome;
}

}  // namespace

SeparatorResult separator_heuristic(const QuotientGraph& q, double alpha) {
    const int k = q.num_nodes();
    const double total = q.total_weight();
    if (total <= 0.0) throw ContractViolation("total weight > 0");
    const double budget = alpha * total + kTol;

    std::vector<char> removed(static_cast<std::size_t>(k), 0);
    std::vector<int> insertion_order;

    while (true) {
        // Heaviest violating component; ties to the smallest leading node.
        const auto comps = quotient_components(q, removed);
        const QuotientComponent* worst = nullptr;
        for (const auto& comp : comps) {
            if (comp.weight <= budget) continue;
            if (worst == nullptr || comp.weight > worst->weight ||
                (comp.weight == worst->weight && comp.nodes.front() < worst->nodes.front()))
                worst = &comp;
        }
        if (worst == nullptr) break;

        // BFS layers from the maximum-weight node (ties to the smallest id).
        int source = worst->nodes.front();
        for (int v : worst->nodes)
            if (q.node_weight[static_cast<std::size_t>(v)] >
                q.node_weight[static_cast<std::size_t>(source)])
                source = v;
        std::vector<int> layer_of(static_cast<std::size_t>(k), -1);
        std::vector<std::vector<int>> layers;
        std::set<int> comp_set(worst->nodes.begin(), worst->nodes.end());
        layers.push_back({source});
        layer_of[static_cast<std::size_t>(source)] = 0;
        while (true) {
            std::vector<int> next;
            for (int v : layers.back())
                for (int w : q.adj[static_cast<std::size_t>(v)]) {
                    if (!comp_set.contains(w) || removed[static_cast<std::size_t>(w)] ||
                        layer_of[static_cast<std::size_t>(w)] != -1)
                        continue;
                    layer_of[static_cast<std::size_t>(w)] = static_cast<int>(layers.size());
                    next.push_back(w);
                }
            if (next.empty()) break;
            std::sort(next.begin(), next.end());
            layers.push_back(std::move(next));
        }

        // Pick the smallest layer whose removal makes every piece feasible;
        // if no layer manages that, the one minimizing the heaviest piece.
        int best = -1;
        bool best_feasible = false;
        double best_piece = 0.0;
        for (std::size_t j = 0; j < layers.size(); ++j) {
            std::vector<char> layer_mask(static_cast<std::size_t>(k), 0);
            for (int v : layers[j]) layer_mask[static_cast<std::size_t>(v)] = 1;
            const auto outcome = evaluate_layer(q, worst->nodes, removed, layer_mask, budget);
            const bool better = [&] {
                if (best == -1) return true;
                if (outcome.all_feasible != best_feasible) return outcome.all_feasible;
                if (outcome.all_feasible)
                    return layers[j].size() < layers[static_cast<std::size_t>(best)].size();
                if (outcome.max_piece_weight != best_piece)
                    return outcome.max_piece_weight < best_piece;
                return layers[j].size() < layers[static_cast<std::size_t>(best)].size();
            }();
            if (better) {
                best = static_cast<int>(j);
                best_feasible = outcome.all_feasible;
                best_piece = outcome.max_piece_weight;
            }
        }
        for (int v : layers[static_cast<std::size_t>(best)]) {
            removed[static_cast<std::size_t>(v)] = 1;
            insertion_order.push_back(v);
        }
    }

    // Inclusion-minimal pruning, reverse insertion order.  Feasibility is
    // monotone under adding nodes, so one pass suffices.
    for (auto it = insertion_order.rbegin(); it != insertion_order.rend(); ++it) {
        removed[static_cast<std::size_t>(*it)] = 0;
        if (max_component_weight(q, removed) > budget) {
            removed[static_cast<std::size_t>(*it)] = 1;
        } else {
            *it = -1;
        }
    }

    SeparatorResult result;
    for (int v : insertion_order)
        if (v != -1) result.chosen.push_back(v);
    std::sort(result.chosen.begin(), result.chosen.end());
    result.alpha = alpha;
    result.achieved_balance = quotient_balance(q, result.chosen);
    return result;
}

std::vector<Vertex> approximate_path_separator(const Graph& g, const RootedSPTree& tree,
                                               const std::vector<double>& vertex_weights,
                                               double alpha, SeparatorSolver solver) {
    if (tree.size() != g.num_vertices())
        throw ContractViolation("tree spans V(G)");
    double total = 0.0;
    for (double w : vertex_weights) {
        if (!(w >= 0.0)) throw ContractViolation("weights >= 0");
        total += w;
    }
    if (total <= 0.0) throw ContractViolation("total weight > 0");

    const auto d = caterpillar_decomposition(tree);
    const auto q = build_quotient_graph(g, d, vertex_weights);
    const bool exact = solver == SeparatorSolver::Exact ||
                       (solver == SeparatorSolver::Auto && q.num_nodes() <= 20);
    const auto result = exact ? separator_exact(q, alpha) : separator_heuristic(q, alpha);

    std::vector<Vertex> leaves;
    leaves.reserve(result.chosen.size());
    for (int node : result.chosen) leaves.push_back(d.leaf_rep[static_cast<std::size_t>(node)]);
    std::sort(leaves.begin(), leaves.end());
    return leaves;
}

double balance_after_removal(const Graph& g, const std::vector<double>& vertex_weights,
                             const std::vector<char>& removed_mask) {
    double total = 0.0;
    for (double w : vertex_weights) total += w;
    if (total <= 0.0) return 0.0;
    double worst = 0.0;
    for (const auto& comp : connected_components(g, removed_mask)) {
        double weight = 0.0;
        for (Vertex v : comp) weight += vertex_weights[static_cast<std::size_t>(v)];
        worst = std::max(worst, weight);
    }
    return worst / total;
}

std::vector<char> root_paths_mask(const RootedSPTree& tree, const std::vector<Vertex>& roots) {
    std::vector<char> mask(static_cast<std::size_t>(tree.size()), 0);
    for (Vertex u : roots) {
        Vertex cur = u;
        while (true) {
            mask[static_cast<std::size_t>(cur)] = 1;
            if (cur == tree.root) break;
            cur = tree.parent[static_cast<std::size_t>(cur)];
        }
    }
    return mask;
}

}  // namespace pathsep
