#include "pathsep/generators.hpp"

#include <string>

#include "pathsep/errors.hpp"
#include "pathsep/rng.hpp"

namespace pathsep {

Graph toroidal_grid(int m, int k) {
    if (m < 3 || k < 3) throw ContractViolation("toroidal_grid requires m,k >= 3");
    Graph g(m * k);
    const auto id = [k](int i, int j) { return i * k + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) {
            g.add_edge(id(i, j), id((i + 1) % m, j), 1.0);
            g.add_edge(id(i, j), id(i, (j + 1) % k), 1.0);
        }
    return g;
}

FamilySpec toroidal_grid_spec(int m, int k) {
    return {"toroidal_grid",
            {m, k},
            1,
            "nonplanar by is_planar; the canonical torus rotation system has mk faces, "
            "so Euler characteristic 0"};
}

Graph genus_chain(int g, int m, int k) {
    if (g < 1) throw ContractViolation("genus_chain requires g >= 1");
    const Graph block = toroidal_grid(m, k);
    const int block_n = block.num_vertices();
    Graph chain(g * block_n);
    for (int b = 0; b < g; ++b) {
        const int offset = b * block_n;
        for (const Edge& e : block.edges()) chain.add_edge(offset + e.u, offset + e.v, e.length);
    }
    for (int b = 0; b + 1 < g; ++b) chain.add_edge(b * block_n, (b + 1) * block_n, 1.0);
    return chain;
}

FamilySpec genus_chain_spec(int g, int m, int k) {
    return {"genus_chain",
            {g, m, k},
            g,
            "block additivity over g verified toroidal blocks; bridge blocks have genus 0"};
}

Graph complete_graph(int n) {
    if (n < 1) throw ContractViolation("complete_graph requires n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v, 1.0);
    return g;
}

FamilySpec complete_graph_spec(int n) {
    int claim = 0;
    std::string provenance = "planar by inspection";
    if (n >= 5) {
        claim = ((n - 3) * (n - 4) + 11) / 12;
        provenance = n <= 10 ? "Ringel-Youngs formula; rotation-system search is feasible locally"
                             : "Ringel-Youngs formula; not locally re-verified";
    }
    return {"complete", {n}, claim, provenance};
}

Graph planar_grid(int m, int k) {
    if (m < 1 || k < 1) throw ContractViolation("planar_grid requires m,k >= 1");
    Graph g(m * k);
    const auto id = [k](int i, int j) { return i * k + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) {
            if (i + 1 < m) g.add_edge(id(i, j), id(i + 1, j), 1.0);
            if (j + 1 < k) g.add_edge(id(i, j), id(i, j + 1), 1.0);
        }
    return g;
}

FamilySpec planar_grid_spec(int m, int k) {
    return {"planar_grid", {m, k}, 0, "planar by is_planar"};
}

Graph random_lengths(const Graph& g, std::uint64_t seed, double lo, double hi) {
    if (!(lo >= 0.0) || !(hi >= lo)) throw ContractViolation("0 <= lo <= hi");
    SplitMix64 rng(seed);
    Graph out(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) out.set_vertex_weight(v, g.vertex_weight(v));
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, lo + (hi - lo) * rng.next_double());
    return out;
}

}  // namespace pathsep
