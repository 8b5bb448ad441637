#include "pathsep/planarizer.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pathsep/errors.hpp"
#include "pathsep/planarity.hpp"
#include "pathsep/separator.hpp"
#include "pathsep/tree_paths.hpp"

namespace pathsep {

namespace {

std::vector<std::vector<Vertex>> nonplanar_parts(const Graph& g, const std::vector<char>& mask) {
    std::vector<std::vector<Vertex>> result;
    for (auto& comp : connected_components(g, mask))
        if (!is_planar(induced_subgraph(g, comp)).planar) result.push_back(std::move(comp));
    return result;
}

// Largest piece of `component` surviving the removal mask.
int largest_surviving_piece(const Graph& g, const std::vector<Vertex>& component,
                            const std::vector<char>& mask) {
    const std::set<Vertex> inside(component.begin(), component.end());
    int largest = 0;
    for (const auto& comp : connected_components(g, mask)) {
        int count = 0;
        for (Vertex v : comp)
            if (inside.contains(v)) ++count;
        largest = std::max(largest, count);
    }
    return largest;
}

}  // namespace

std::vector<std::vector<Vertex>> nonplanar_components(const Graph& g,
                                                      const std::vector<Vertex>& removed) {
    std::vector<char> mask(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : removed) mask[static_cast<std::size_t>(v)] = 1;
    return nonplanar_parts(g, mask);
}

PlanarizationResult planarizing_path_roots(const Graph& g, Vertex root) {
    if (!is_connected(g)) throw ContractViolation("graph connected");
    const int n = g.num_vertices();
    const auto tree = shortest_path_tree(g, root);
    const auto decomposition = caterpillar_decomposition(tree);

    PlanarizationResult result;
    result.root = root;

    std::set<Vertex> roots;
    std::vector<char> removed_mask(static_cast<std::size_t>(n), 0);

    while (true) {
        const auto targets = nonplanar_parts(g, removed_mask);
        if (targets.empty()) break;

        IterationRecord record;
        std::set<Vertex> round_roots;
        for (const auto& component : targets) {
            std::vector<double> weights(static_cast<std::size_t>(n), 0.0);
            for (Vertex v : component) weights[static_cast<std::size_t>(v)] = 1.0;

            auto leaves = approximate_path_separator(g, tree, weights, 0.75);
            auto trial_mask = removed_mask;
            for (Vertex v : leaves)
                for (Vertex u : root_path_vertices(tree, v))
                    trial_mask[static_cast<std::size_t>(u)] = 1;

            // A solver that met its 3/4-balance contract always shrinks the
            // component; if it somehow did not, retry exact, then fall back
            // to deleting every decomposition path meeting the component.
            if (largest_surviving_piece(g, component, trial_mask) >=
                static_cast<int>(component.size())) {
                const auto q =
                    build_quotient_graph(g, decomposition, weights);
                if (q.num_nodes() <= 20) {
                    leaves = approximate_path_separator(g, tree, weights, 0.75,
                                                        SeparatorSolver::Exact);
                } else {
                    std::set<int> touching;
                    for (Vertex v : component)
                        touching.insert(decomposition.owner[static_cast<std::size_t>(v)]);
                    leaves.clear();
                    for (int node : touching)
                        leaves.push_back(decomposition.leaf_rep[static_cast<std::size_t>(node)]);
                    std::sort(leaves.begin(), leaves.end());
                }
            }

            record.component_sizes.push_back(static_cast<int>(component.size()));
            record.separator_sizes.push_back(static_cast<int>(leaves.size()));
            round_roots.insert(leaves.begin(), leaves.end());
        }

        for (Vertex v : round_roots) {
            roots.insert(v);
            for (Vertex u : root_path_vertices(tree, v))
                removed_mask[static_cast<std::size_t>(u)] = 1;
        }
        result.iterations.push_back(std::move(record));
    }

    result.path_roots.assign(roots.begin(), roots.end());
    for (Vertex v = 0; v < n; ++v)
        if (removed_mask[static_cast<std::size_t>(v)]) result.removed.push_back(v);
    result.remainder_planar = true;
    return result;
}

}  // namespace pathsep
