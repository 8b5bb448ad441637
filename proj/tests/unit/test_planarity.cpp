#include <doctest.h>

#include "pathsep/errors.hpp"
#include "pathsep/generators.hpp"
#include "pathsep/planarity.hpp"
#include "support/oracles.hpp"

using namespace pathsep;
using namespace pathsep::testing;

namespace {

Graph k33() {
    Graph g(6);
    for (int l = 0; l < 3; ++l)
        for (int r = 3; r < 6; ++r) g.add_edge(l, r, 1.0);
    return g;
}

}  // namespace

TEST_CASE("documented verdicts") {
    CHECK(is_planar(complete_graph(4)).planar);
    // Euler bound: K5 has 10 > 3*5-6 = 9 edges.
    CHECK(complete_graph(5).num_edges() == 10);
    CHECK_FALSE(is_planar(complete_graph(5)).planar);
    // Bipartite Euler bound: K3,3 has 9 > 2*6-4 = 8 edges.
    CHECK(k33().num_edges() == 9);
    CHECK_FALSE(is_planar(k33()).planar);
    CHECK_FALSE(is_planar(toroidal_grid(3, 3)).planar);
    CHECK(is_planar(planar_grid(10, 10)).planar);
}

TEST_CASE("oracle finds a K3,3 subdivision in the 3x3 torus grid") {
    const Graph g = toroidal_grid(3, 3);
    const auto verdict = kuratowski_oracle_small(g);
    CHECK_FALSE(verdict.planar);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->kind == KuratowskiKind::K33);
    CHECK(witness_is_valid(g, *verdict.witness));
}

TEST_CASE("oracle handles trees and near-complete graphs") {
    SplitMix64 rng(3);
    for (int n = 1; n <= 10; ++n) {
        const auto tree = random_tree(rng, n, TreeShape::Attachment);
        Graph g(n);
        for (Vertex v = 1; v < n; ++v) g.add_edge(v, tree.parent[static_cast<std::size_t>(v)], 1.0);
        CHECK(kuratowski_oracle_small(g).planar);
    }
    // K5 minus an edge is maximal planar on 5 vertices.
    Graph k5_minus = complete_graph(5);
    Graph rebuilt(5);
    for (const Edge& e : k5_minus.edges())
        if (!(e.u == 3 && e.v == 4)) rebuilt.add_edge(e.u, e.v, 1.0);
    CHECK(kuratowski_oracle_small(rebuilt).planar);
    CHECK_FALSE(kuratowski_oracle_small(complete_graph(5)).planar);
    CHECK(kuratowski_oracle_small(complete_graph(5)).witness->kind == KuratowskiKind::K5);

    CHECK_THROWS_AS(kuratowski_oracle_small(complete_graph(11)), ContractViolation);
}

TEST_CASE("is_planar agrees with the oracle on random small graphs") {
    SplitMix64 rng(17);
    int nonplanar_seen = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(10));
        const double p = 0.2 + 0.6 * rng.next_double();
        const Graph g = random_graph(rng, n, p);
        const auto fast = is_planar(g);
        const auto oracle = kuratowski_oracle_small(g);
        CHECK(fast.planar == oracle.planar);
        if (!oracle.planar) {
            ++nonplanar_seen;
            REQUIRE(oracle.witness.has_value());
            CHECK(witness_is_valid(g, *oracle.witness));
            REQUIRE(fast.witness.has_value());
            CHECK(witness_is_valid(g, *fast.witness));
        }
    }
    CHECK(nonplanar_seen > 10);  // corpus exercises both verdicts
}

TEST_CASE("planarity is monotone under vertex deletion") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(12));
        const Graph g = random_graph(rng, n, 0.3);
        if (!is_planar(g).planar) continue;
        for (Vertex drop = 0; drop < n; ++drop) {
            std::vector<Vertex> keep;
            for (Vertex v = 0; v < n; ++v)
                if (v != drop) keep.push_back(v);
            CHECK(is_planar(induced_subgraph(g, keep)).planar);
        }
    }
}

TEST_CASE("edge-count shortcut is consistent") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 5 + static_cast<int>(rng.next_below(20));
        const Graph g = random_graph(rng, n, 0.9);
        if (g.num_edges() > 3 * g.num_vertices() - 6) CHECK_FALSE(is_planar(g).planar);
    }
}

TEST_CASE("disconnected planarity is the conjunction over components") {
    // K5 plus a disjoint K4: non-planar because of the K5 block.
    Graph both(9);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) both.add_edge(u, v, 1.0);
    for (int u = 5; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) both.add_edge(u, v, 1.0);
    CHECK_FALSE(is_planar(both).planar);

    Graph planar_pair(8);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) planar_pair.add_edge(u, v, 1.0);
    for (int u = 4; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) planar_pair.add_edge(u, v, 1.0);
    CHECK(is_planar(planar_pair).planar);
}
