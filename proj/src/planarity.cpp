#include "pathsep/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <set>
#include <string>

#include "pathsep/errors.hpp"

namespace pathsep {

std::vector<Vertex> KuratowskiWitness::vertices() const {
    std::set<Vertex> all(branch.begin(), branch.end());
    for (const auto& path : paths) all.insert(path.begin(), path.end());
    return {all.begin(), all.end()};
}

namespace {

bool boyer_myrvold_planar(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>>;
    BoostGraph bg(static_cast<std::size_t>(g.num_vertices()));
    for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

// Backtracking search for a system of internally-disjoint branch-to-branch
// paths.  `used_` holds branch vertices plus interiors of paths placed so
// far; neighbor lists are scanned in ascending vertex order, so the first
// system found is deterministic.
class SubdivisionSearch {
public:
    SubdivisionSearch(const Graph& g, std::vector<Vertex> branch,
                      std::vector<std::pair<int, int>> pairs)
        : g_(g),
          branch_(std::move(branch)),
          pairs_(std::move(pairs)),
          used_(static_cast<std::size_t>(g.num_vertices()), 0) {
        for (Vertex b : branch_) used_[static_cast<std::size_t>(b)] = 1;
        paths_.resize(pairs_.size());
        sorted_neighbors_.resize(static_cast<std::size_t>(g.num_vertices()));
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            for (const auto& [w, len] : g.neighbors(v)) {
                (void)len;
                sorted_neighbors_[static_cast<std::size_t>(v)].push_back(w);
            }
            std::sort(sorted_neighbors_[static_cast<std::size_t>(v)].begin(),
                      sorted_neighbors_[static_cast<std::size_t>(v)].end());
        }
    }

    bool run() { return connect(0); }

    std::vector<std::vector<Vertex>> paths() const { return paths_; }

private:
    bool connect(std::size_t pair_index) {
        if (pair_index == pairs_.size()) return true;
        const Vertex from = branch_[static_cast<std::size_t>(pairs_[pair_index].first)];
        const Vertex to = branch_[static_cast<std::size_t>(pairs_[pair_index].second)];
        std::vector<Vertex> path = {from};
        return extend(path, to, pair_index);
    }

    bool extend(std::vector<Vertex>& path, Vertex to, std::size_t pair_index) {
        const Vertex at = path.back();
        for (Vertex w : sorted_neighbors_[static_cast<std::size_t>(at)]) {
            if (w == to) {
                path.push_back(to);
                paths_[pair_index] = path;
                if (connect(pair_index + 1)) return true;
                path.pop_back();
                continue;
            }
            if (used_[static_cast<std::size_t>(w)]) continue;
            used_[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            if (extend(path, to, pair_index)) return true;
            path.pop_back();
            used_[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    }

    const Graph& g_;
    std::vector<Vertex> branch_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<char> used_;
    std::vector<std::vector<Vertex>> sorted_neighbors_;
    std::vector<std::vector<Vertex>> paths_;
};

// Lexicographic k-subset enumeration over `items`, invoking `body` until it
// returns a witness.
template <typename Body>
std::optional<KuratowskiWitness> for_each_subset(const std::vector<Vertex>& items, int k,
                                                 Body&& body) {
    const int c = static_cast<int>(items.size());
    if (c < k) return std::nullopt;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<Vertex> subset;
        subset.reserve(static_cast<std::size_t>(k));
        for (int i : idx) subset.push_back(items[static_cast<std::size_t>(i)]);
        if (auto w = body(subset)) return w;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == c - k + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::optional<KuratowskiWitness> find_k33_subdivision(const Graph& g) {
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) >= 3) candidates.push_back(v);

    return for_each_subset(candidates, 6, [&](const std::vector<Vertex>& six) {
        // Bipartitions of the 6-set into sides of 3: fix six[0] on the left.
        std::optional<KuratowskiWitness> found;
        for (int b = 1; b < 5 && !found; ++b)
            for (int c = b + 1; c < 6 && !found; ++c) {
                std::vector<Vertex> branch = {six[0], six[static_cast<std::size_t>(b)],
                                              six[static_cast<std::size_t>(c)]};
                for (int i = 1; i < 6; ++i)
                    if (i != b && i != c) branch.push_back(six[static_cast<std::size_t>(i)]);
                std::vector<std::pair<int, int>> pairs;
                for (int l = 0; l < 3; ++l)
                    for (int r = 3; r < 6; ++r) pairs.emplace_back(l, r);
                SubdivisionSearch search(g, branch, pairs);
                if (search.run())
                    found = KuratowskiWitness{KuratowskiKind::K33, branch, search.paths()};
            }
        return found;
    });
}

std::optional<KuratowskiWitness> find_k5_subdivision(const Graph& g) {
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) >= 4) candidates.push_back(v);

    return for_each_subset(candidates, 5, [&](const std::vector<Vertex>& branch) {
        std::optional<KuratowskiWitness> found;
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
        SubdivisionSearch search(g, branch, pairs);
        if (search.run()) found = KuratowskiWitness{KuratowskiKind::K5, branch, search.paths()};
        return found;
    });
}

}  // namespace

PlanarityVerdict is_planar(const Graph& g) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    if (n < 5) return {true, std::nullopt};
    PlanarityVerdict verdict;
    if (m > 3 * n - 6) {
        verdict.planar = false;  // Euler bound; agrees with the exact test
    } else {
        verdict.planar = boyer_myrvold_planar(g);
    }
    if (!verdict.planar && n <= 10) {
        auto oracle = kuratowski_oracle_small(g);
        verdict.witness = std::move(oracle.witness);
    }
    return verdict;
}

PlanarityVerdict kuratowski_oracle_small(const Graph& g) {
    if (g.num_vertices() > 10)
        throw ContractViolation("kuratowski_oracle_small requires n <= 10",
                                "n = " + std::to_string(g.num_vertices()));
    if (auto w = find_k33_subdivision(g)) return {false, std::move(w)};
    if (auto w = find_k5_subdivision(g)) return {false, std::move(w)};
    return {true, std::nullopt};
}

}  // namespace pathsep
