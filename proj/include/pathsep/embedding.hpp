#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathsep/graph.hpp"
#include "pathsep/planarizer.hpp"

namespace pathsep {

enum class HostBackend { Star, GreedyAugment };

std::string to_string(HostBackend backend);
HostBackend parse_backend(const std::string& name);

/// A sampled planar host: a planar, connected, spanning subgraph of G with
/// the original edge lengths.  The embedding map is the identity on
/// vertices, which makes non-contraction structural.
struct PlanarHostSample {
    Graph host;
    std::uint64_t seed = 0;
    HostBackend backend = HostBackend::GreedyAugment;
};

/// Draws one host.  `star` keeps all edges inside each planar component of
/// G minus the removed set S, the tree edges of T inside S, and one
/// uniformly random component-to-S edge per component that has one.
/// `greedy-augment` then re-adds the remaining edges of G in seed-shuffled
/// order whenever insertion keeps the host planar.  Identical inputs yield
/// an identical host.
PlanarHostSample sample_planar_host(const Graph& g, const PlanarizationResult& result,
                                    std::uint64_t seed, HostBackend backend);

struct NoncontractionReport {
    bool ok = false;
    Vertex worst_u = -1;
    Vertex worst_v = -1;
    double worst_ratio = 1.0;  // max d_H / d_G over pairs with d_G > 0
    std::string failure;       // violated invariant, empty when ok
};

/// Exact APSP check of d_H(x,y) >= d_G(x,y) - 1e-9 for all pairs, plus the
/// structural subgraph/connectivity invariants of PlanarHostSample.
NoncontractionReport verify_noncontraction(const Graph& g, const PlanarHostSample& sample);

struct PairStat {
    Vertex x = 0;
    Vertex y = 0;
    double distance = 0.0;   // d_G(x,y)
    double mean_host = 0.0;  // mean over samples of d_H(x,y)
};

struct DistortionReport {
    int samples = 0;
    std::string backend;
    double d_hat = 1.0;  // max over pairs of mean_host / distance
    Vertex argmax_x = -1;
    Vertex argmax_y = -1;
    double max_single_sample_expansion = 1.0;
    std::vector<PairStat> pair_stats;  // every evaluated pair, (x,y) ascending
};

/// Empirical distortion over N hosts drawn with seeds seed+1..seed+N.
/// All pairs are measured for n <= 400; larger graphs use a seeded sample
/// of up to 100000 distinct pairs (stream derived from `seed`).  Any host
/// violating its invariants aborts with a ContractViolation.
DistortionReport estimate_distortion(const Graph& g, const PlanarizationResult& result, int samples,
                                     std::uint64_t seed, HostBackend backend);

struct MstDemoReport {
    int samples = 0;
    std::string backend;
    double mst_g = 0.0;
    double mean_mst_host = 0.0;
    double ratio = 1.0;
};

/// MST instantiation of the linear-minimization reduction: compares the MST
/// cost of G with the mean MST cost over sampled hosts (same seed schedule
/// as estimate_distortion).  Hosts span G, so the mean can never be smaller.
MstDemoReport mst_reduction_demo(const Graph& g, const PlanarizationResult& result, int samples,
                                 std::uint64_t seed,
                                 HostBackend backend = HostBackend::GreedyAugment);

/// Kruskal MST cost; throws on disconnected input.
double mst_cost(const Graph& g);

}  // namespace pathsep
