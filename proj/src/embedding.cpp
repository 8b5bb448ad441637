#include "pathsep/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "pathsep/errors.hpp"
#include "pathsep/planarity.hpp"
#include "pathsep/rng.hpp"

namespace pathsep {

std::string to_string(HostBackend backend) {
    return backend == HostBackend::Star ? "star" : "greedy-augment";
}

HostBackend parse_backend(const std::string& name) {
    if (name == "star") return HostBackend::Star;
    if (name == "greedy-augment") return HostBackend::GreedyAugment;
    throw ContractViolation("backend in {star, greedy-augment}", name);
}

namespace {

Graph empty_host(const Graph& g) {
    Graph host(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) host.set_vertex_weight(v, g.vertex_weight(v));
    return host;
}

}  // namespace

PlanarHostSample sample_planar_host(const Graph& g, const PlanarizationResult& result,
                                    std::uint64_t seed, HostBackend backend) {
    if (!result.remainder_planar) throw ContractViolation("remainder planar");
    if (!is_connected(g)) throw ContractViolation("graph connected");
    const int n = g.num_vertices();

    std::vector<char> in_s(static_cast<std::size_t>(n), 0);
    for (Vertex v : result.removed) in_s[static_cast<std::size_t>(v)] = 1;

    // Component ids of G \ S; -1 for removed vertices.
    const auto comps = connected_components(g, in_s);
    std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    Graph host = empty_host(g);
    // All edges inside a surviving component, in G's edge order.
    for (const Edge& e : g.edges()) {
        const int cu = comp_of[static_cast<std::size_t>(e.u)];
        const int cv = comp_of[static_cast<std::size_t>(e.v)];
        if (cu != -1 && cu == cv) host.add_edge(e.u, e.v, e.length);
    }
    // Tree edges of T inside S.  S is a union of root paths, so these form
    // a subtree containing the root.
    if (!result.removed.empty()) {
        const auto tree = shortest_path_tree(g, result.root);
        for (Vertex v = 0; v < n; ++v) {
            if (v == result.root || !in_s[static_cast<std::size_t>(v)]) continue;
            const Vertex p = tree.parent[static_cast<std::size_t>(v)];
            if (in_s[static_cast<std::size_t>(p)]) host.add_edge(v, p, g.edge_length(v, p));
        }
    }
    // One uniformly random cross edge per component that has one, components
    // in ascending smallest-vertex order, candidates in G's edge order.
    SplitMix64 rng(seed);
    for (const auto& comp : comps) {
        const int cid = comp_of[static_cast<std::size_t>(comp.front())];
        std::vector<const Edge*> cross;
        for (const Edge& e : g.edges()) {
            const bool u_inside = comp_of[static_cast<std::size_t>(e.u)] == cid;
            const bool v_inside = comp_of[static_cast<std::size_t>(e.v)] == cid;
            if ((u_inside && in_s[static_cast<std::size_t>(e.v)]) ||
                (v_inside && in_s[static_cast<std::size_t>(e.u)]))
                cross.push_back(&e);
        }
        if (cross.empty()) continue;
        const Edge* pick = cross[rng.next_below(cross.size())];
        host.add_edge(pick->u, pick->v, pick->length);
    }

    if (backend == HostBackend::GreedyAugment) {
        std::vector<const Edge*> remaining;
        for (const Edge& e : g.edges())
            if (!host.has_edge(e.u, e.v)) remaining.push_back(&e);
        rng.shuffle(remaining);
        for (const Edge* e : remaining) {
            Graph trial = host;
            trial.add_edge(e->u, e->v, e->length);
            if (is_planar(trial).planar) host = std::move(trial);
        }
    }

    return {std::move(host), seed, backend};
}

NoncontractionReport verify_noncontraction(const Graph& g, const PlanarHostSample& sample) {
    NoncontractionReport report;
    const Graph& host = sample.host;
    if (host.num_vertices() != g.num_vertices()) {
        report.failure = "host spans V(G)";
        return report;
    }
    for (const Edge& e : host.edges()) {
        if (!g.has_edge(e.u, e.v) || g.edge_length(e.u, e.v) != e.length) {
            report.failure = "E(H) subset of E(G)";
            return report;
        }
    }
    if (!is_connected(host)) {
        report.failure = "host connected";
        return report;
    }

    const auto dg = all_pairs_distances(g);
    const auto dh = all_pairs_distances(host);
    const int n = g.num_vertices();
    report.ok = true;
    report.worst_ratio = n > 1 ? 0.0 : 1.0;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            if (dh(x, y) < dg(x, y) - kTol) {
                report.ok = false;
                report.failure = "d_H >= d_G";
                report.worst_u = x;
                report.worst_v = y;
                return report;
            }
            if (dg(x, y) > kTol) {
                const double ratio = dh(x, y) / dg(x, y);
                if (ratio > report.worst_ratio) {
                    report.worst_ratio = ratio;
                    report.worst_u = x;
                    report.worst_v = y;
                }
            }
        }
    if (report.worst_u == -1) report.worst_ratio = 1.0;
    return report;
}

namespace {

void check_host_invariants(const Graph& g, const PlanarHostSample& sample) {
    const Graph& host = sample.host;
    if (host.num_vertices() != g.num_vertices())
        throw ContractViolation("host spans V(G)", "seed " + std::to_string(sample.seed));
    for (const Edge& e : host.edges())
        if (!g.has_edge(e.u, e.v) || g.edge_length(e.u, e.v) != e.length)
            throw ContractViolation("E(H) subset of E(G)", "seed " + std::to_string(sample.seed));
    if (!is_connected(host))
        throw ContractViolation("host connected", "seed " + std::to_string(sample.seed));
    if (!is_planar(host).planar)
        throw ContractViolation("host planar", "seed " + std::to_string(sample.seed));
}

std::vector<std::pair<Vertex, Vertex>> distortion_pairs(const Graph& g, std::uint64_t seed) {
    const int n = g.num_vertices();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    const std::size_t all = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    constexpr std::size_t kPairCap = 100000;
    if (n <= 400 || all <= kPairCap) {
        pairs.reserve(all);
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
        return pairs;
    }
    SplitMix64 rng(seed);
    std::set<std::pair<Vertex, Vertex>> drawn;
    while (drawn.size() < kPairCap) {
        const Vertex x = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
        const Vertex y = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (x == y) continue;
        drawn.emplace(std::min(x, y), std::max(x, y));
    }
    return {drawn.begin(), drawn.end()};
}

}  // namespace

DistortionReport estimate_distortion(const Graph& g, const PlanarizationResult& result, int samples,
                                     std::uint64_t seed, HostBackend backend) {
    if (samples < 1) throw ContractViolation("samples >= 1");
    const auto pairs = distortion_pairs(g, seed);

    // Group pair distances by source so each host needs one Dijkstra per
    // distinct source rather than a full APSP.
    std::vector<std::vector<std::size_t>> by_source(static_cast<std::size_t>(g.num_vertices()));
    for (std::size_t i = 0; i < pairs.size(); ++i)
        by_source[static_cast<std::size_t>(pairs[i].first)].push_back(i);

    std::vector<double> base(pairs.size(), 0.0);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (by_source[static_cast<std::size_t>(s)].empty()) continue;
        const auto dist = single_source_distances(g, s);
        for (std::size_t i : by_source[static_cast<std::size_t>(s)])
            base[i] = dist[static_cast<std::size_t>(pairs[i].second)];
    }

    std::vector<double> sums(pairs.size(), 0.0);
    double max_single = 1.0;
    for (int k = 1; k <= samples; ++k) {
        const auto sample = sample_planar_host(g, result, seed + static_cast<std::uint64_t>(k), backend);
        check_host_invariants(g, sample);
        for (Vertex s = 0; s < g.num_vertices(); ++s) {
            if (by_source[static_cast<std::size_t>(s)].empty()) continue;
            const auto dist = single_source_distances(sample.host, s);
            for (std::size_t i : by_source[static_cast<std::size_t>(s)]) {
                const double dh = dist[static_cast<std::size_t>(pairs[i].second)];
                if (dh < base[i] - kTol)
                    throw ContractViolation("d_H >= d_G",
                                            "seed " + std::to_string(sample.seed));
                sums[i] += dh;
                if (base[i] > kTol) max_single = std::max(max_single, dh / base[i]);
            }
        }
    }

    DistortionReport report;
    report.samples = samples;
    report.backend = to_string(backend);
    report.max_single_sample_expansion = max_single;
    report.pair_stats.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double mean = sums[i] / samples;
        report.pair_stats.push_back({pairs[i].first, pairs[i].second, base[i], mean});
        if (base[i] > kTol) {
            const double ratio = mean / base[i];
            if (ratio > report.d_hat) {
                report.d_hat = ratio;
                report.argmax_x = pairs[i].first;
                report.argmax_y = pairs[i].second;
            }
        }
    }
    return report;
}

double mst_cost(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return 0.0;
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tuple(a.length, a.u, a.v) < std::tuple(b.length, b.u, b.v);
    });
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    double cost = 0.0;
    int joined = 0;
    for (const Edge& e : edges) {
        const int ru = find(e.u);
        const int rv = find(e.v);
        if (ru == rv) continue;
        parent[static_cast<std::size_t>(ru)] = rv;
        cost += e.length;
        ++joined;
    }
    if (joined != n - 1) throw ContractViolation("graph connected", "spanning tree incomplete");
    return cost;
}

MstDemoReport mst_reduction_demo(const Graph& g, const PlanarizationResult& result, int samples,
                                 std::uint64_t seed, HostBackend backend) {
    if (samples < 1) throw ContractViolation("samples >= 1");
    if (!is_connected(g)) throw ContractViolation("graph connected");

    MstDemoReport report;
    report.samples = samples;
    report.backend = to_string(backend);
    report.mst_g = mst_cost(g);
    double sum = 0.0;
    for (int k = 1; k <= samples; ++k) {
        const auto sample = sample_planar_host(g, result, seed + static_cast<std::uint64_t>(k), backend);
        sum += mst_cost(sample.host);
    }
    report.mean_mst_host = sum / samples;
    report.ratio = report.mst_g > 0.0 ? report.mean_mst_host / report.mst_g
                                      : (report.mean_mst_host > 0.0 ? kInfDist : 1.0);
    return report;
}

}  // namespace pathsep
