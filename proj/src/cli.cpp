#include "pathsep/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pathsep/embedding.hpp"
#include "pathsep/errors.hpp"
#include "pathsep/generators.hpp"
#include "pathsep/graph_io.hpp"
#include "pathsep/planarity.hpp"
#include "pathsep/planarizer.hpp"
#include "pathsep/report.hpp"
#include "pathsep/separator.hpp"
#include "pathsep/version.hpp"

namespace pathsep {

namespace {

constexpr int kMaxVertices = 5000;

using Clock = std::chrono::steady_clock;

class StageTimer {
public:
    void start(const std::string& stage) {
        stage_ = stage;
        begin_ = Clock::now();
    }
    void stop() {
        const double ms =
            std::chrono::duration<double, std::milli>(Clock::now() - begin_).count();
        timings_[stage_] = ms;
    }
    ordered_json json() const { return timings_; }

private:
    std::string stage_;
    Clock::time_point begin_;
    ordered_json timings_ = ordered_json::object();
};

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ContractViolation("input file readable", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadedGraph {
    Graph graph;
    std::string digest;
};

LoadedGraph load_graph(const std::string& path) {
    const std::string bytes = read_file_bytes(path);
    LoadedGraph loaded{parse_graph_string(bytes), content_digest(bytes)};
    if (loaded.graph.num_vertices() > kMaxVertices)
        throw ContractViolation("instance cap n <= 5000",
                                std::to_string(loaded.graph.num_vertices()) + " vertices");
    return loaded;
}

ordered_json base_report(const std::string& command, const std::string& digest,
                         std::uint64_t seed) {
    ordered_json report = ordered_json::object();
    report["tool"] = kToolName;
    report["version"] = kVersion;
    report["command"] = command;
    report["input_digest"] = digest;
    report["seed"] = seed;
    return report;
}

ordered_json witness_json(const KuratowskiWitness& witness) {
    ordered_json w = ordered_json::object();
    w["kind"] = witness.kind == KuratowskiKind::K5 ? "K5" : "K3,3";
    w["branch_vertices"] = witness.branch;
    w["paths"] = witness.paths;
    return w;
}

ordered_json iterations_json(const PlanarizationResult& result) {
    ordered_json rounds = ordered_json::array();
    for (const auto& record : result.iterations) {
        ordered_json round = ordered_json::object();
        round["component_sizes"] = record.component_sizes;
        round["separator_sizes"] = record.separator_sizes;
        rounds.push_back(std::move(round));
    }
    return rounds;
}

void emit(const ordered_json& report, const std::string& output_path, std::ostream& out) {
    const std::string text = dump_report(report);
    if (output_path.empty()) {
        out << text;
    } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) throw ContractViolation("output file writable", output_path);
        file << text;
    }
}

std::string join_args(const std::vector<std::string>& args) {
    std::string joined;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) joined += ' ';
        joined += args[i];
    }
    return joined;
}

void require_root(const Graph& g, int root) {
    if (root < 0 || root >= g.num_vertices())
        throw ContractViolation("valid root", std::to_string(root));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Planarizing path sets and stochastic planar-host embeddings"};
    app.require_subcommand(1);

    // gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Emit a generator family to a graph file");
    std::string gen_family;
    int gen_m = 3, gen_k = 3, gen_g = 1, gen_n = 5;
    std::uint64_t gen_lengths_seed = 0;
    double gen_lo = 1.0, gen_hi = 1.0;
    bool gen_randomize = false;
    std::string gen_out;
    gen->add_option("--family", gen_family, "toroidal_grid | genus_chain | complete | planar_grid")
        ->required();
    gen->add_option("--m", gen_m, "grid rows");
    gen->add_option("--k", gen_k, "grid columns");
    gen->add_option("--g", gen_g, "number of toroidal blocks (genus_chain)");
    gen->add_option("--n", gen_n, "vertex count (complete)");
    gen->add_flag("--random-lengths", gen_randomize, "redraw edge lengths uniformly from [lo,hi]");
    gen->add_option("--lengths-seed", gen_lengths_seed, "seed for --random-lengths");
    gen->add_option("--lo", gen_lo, "lower length bound");
    gen->add_option("--hi", gen_hi, "upper length bound");
    gen->add_option("--out", gen_out, "output graph file")->required();

    // planarity ----------------------------------------------------------
    auto* planarity = app.add_subcommand("planarity", "Exact planarity verdict");
    std::string planarity_input, planarity_output;
    planarity->add_option("--input", planarity_input, "graph file")->required();
    planarity->add_option("--output", planarity_output, "report file (default stdout)");

    // planarize ----------------------------------------------------------
    auto* planarize = app.add_subcommand("planarize", "Compute a planarizing set of path roots");
    std::string planarize_input, planarize_output;
    int planarize_root = 0;
    std::uint64_t planarize_seed = 0;
    planarize->add_option("--input", planarize_input, "graph file")->required();
    planarize->add_option("--root", planarize_root, "root vertex (default 0)");
    planarize->add_option("--seed", planarize_seed, "seed echoed into the report");
    planarize->add_option("--output", planarize_output, "report file (default stdout)");

    // separator ----------------------------------------------------------
    auto* separator = app.add_subcommand("separator", "Approximate balanced path separator");
    std::string separator_input, separator_output;
    int separator_root = 0;
    double separator_alpha = 0.75;
    separator->add_option("--input", separator_input, "graph file")->required();
    separator->add_option("--root", separator_root, "root vertex (default 0)");
    separator->add_option("--alpha", separator_alpha, "balance parameter (default 3/4)");
    separator->add_option("--output", separator_output, "report file (default stdout)");

    // embed ----------------------------------------------------------
    auto* embed = app.add_subcommand("embed", "Sample planar hosts and verify them");
    std::string embed_input, embed_output, embed_dir = ".", embed_backend = "greedy-augment";
    int embed_root = 0, embed_samples = 1;
    std::uint64_t embed_seed = 0;
    embed->add_option("--input", embed_input, "graph file")->required();
    embed->add_option("--root", embed_root, "root vertex (default 0)");
    embed->add_option("--samples", embed_samples, "number of hosts to draw");
    embed->add_option("--seed", embed_seed, "base seed; sample i uses seed+i");
    embed->add_option("--backend", embed_backend, "star | greedy-augment");
    embed->add_option("--out-dir", embed_dir, "directory for host files (default .)");
    embed->add_option("--output", embed_output, "report file (default stdout)");

    // distortion ----------------------------------------------------------
    auto* distortion = app.add_subcommand("distortion", "Empirical stochastic-embedding distortion");
    std::string distortion_input, distortion_output, distortion_backend = "greedy-augment";
    int distortion_root = 0, distortion_samples = 100;
    std::uint64_t distortion_seed = 0;
    distortion->add_option("--input", distortion_input, "graph file")->required();
    distortion->add_option("--root", distortion_root, "root vertex (default 0)");
    distortion->add_option("--samples", distortion_samples, "number of hosts (default 100)");
    distortion->add_option("--seed", distortion_seed, "base seed; sample i uses seed+i");
    distortion->add_option("--backend", distortion_backend, "star | greedy-augment");
    distortion->add_option("--output", distortion_output, "report file (default stdout)");

    // mst-demo ----------------------------------------------------------
    auto* mst = app.add_subcommand("mst-demo", "MST reduction demo over sampled hosts");
    std::string mst_input, mst_output, mst_backend = "greedy-augment";
    int mst_root = 0, mst_samples = 100;
    std::uint64_t mst_seed = 0;
    mst->add_option("--input", mst_input, "graph file")->required();
    mst->add_option("--root", mst_root, "root vertex (default 0)");
    mst->add_option("--samples", mst_samples, "number of hosts (default 100)");
    mst->add_option("--seed", mst_seed, "base seed; sample i uses seed+i");
    mst->add_option("--backend", mst_backend, "star | greedy-augment");
    mst->add_option("--output", mst_output, "report file (default stdout)");

    std::vector<const char*> argv;
    argv.push_back(kToolName);
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    const std::string command = join_args(args);
    try {
        StageTimer timer;

        if (gen->parsed()) {
            timer.start("generate");
            Graph graph;
            FamilySpec spec;
            if (gen_family == "toroidal_grid") {
                graph = toroidal_grid(gen_m, gen_k);
                spec = toroidal_grid_spec(gen_m, gen_k);
            } else if (gen_family == "genus_chain") {
                graph = genus_chain(gen_g, gen_m, gen_k);
                spec = genus_chain_spec(gen_g, gen_m, gen_k);
            } else if (gen_family == "complete") {
                graph = complete_graph(gen_n);
                spec = complete_graph_spec(gen_n);
            } else if (gen_family == "planar_grid") {
                graph = planar_grid(gen_m, gen_k);
                spec = planar_grid_spec(gen_m, gen_k);
            } else {
                throw ContractViolation("known family", gen_family);
            }
            if (gen_randomize) graph = random_lengths(graph, gen_lengths_seed, gen_lo, gen_hi);
            const std::string text = write_graph_string(graph);
            std::ofstream file(gen_out, std::ios::binary);
            if (!file) throw ContractViolation("output file writable", gen_out);
            file << text;
            file.close();
            timer.stop();

            auto report = base_report(command, content_digest(text), gen_lengths_seed);
            ordered_json results = ordered_json::object();
            results["family"] = spec.family;
            results["parameters"] = spec.parameters;
            results["genus_claim"] = spec.genus_claim;
            results["provenance"] = spec.provenance;
            results["n"] = graph.num_vertices();
            results["m"] = graph.num_edges();
            results["out"] = gen_out;
            report["results"] = std::move(results);
            report["timing_ms"] = timer.json();
            emit(report, "", out);
            return 0;
        }

        if (planarity->parsed()) {
            timer.start("parse");
            const auto loaded = load_graph(planarity_input);
            timer.stop();
            timer.start("planarity");
            const auto verdict = is_planar(loaded.graph);
            timer.stop();

            auto report = base_report(command, loaded.digest, 0);
            ordered_json results = ordered_json::object();
            results["n"] = loaded.graph.num_vertices();
            results["m"] = loaded.graph.num_edges();
            results["planar"] = verdict.planar;
            if (verdict.witness) results["witness"] = witness_json(*verdict.witness);
            report["results"] = std::move(results);
            report["timing_ms"] = timer.json();
            emit(report, planarity_output, out);
            return 0;
        }

        if (planarize->parsed()) {
            timer.start("parse");
            const auto loaded = load_graph(planarize_input);
            timer.stop();
            require_root(loaded.graph, planarize_root);
            timer.start("planarize");
            const auto result = planarizing_path_roots(loaded.graph, planarize_root);
            timer.stop();

            const auto tree = shortest_path_tree(loaded.graph, planarize_root);
            ordered_json path_lengths = ordered_json::array();
            for (Vertex v : result.path_roots)
                path_lengths.push_back(tree.dist[static_cast<std::size_t>(v)]);

            auto report = base_report(command, loaded.digest, planarize_seed);
            ordered_json results = ordered_json::object();
            results["n"] = loaded.graph.num_vertices();
            results["m"] = loaded.graph.num_edges();
            results["root"] = result.root;
            results["path_roots"] = result.path_roots;
            results["path_count"] = static_cast<int>(result.path_roots.size());
            results["path_lengths"] = std::move(path_lengths);
            results["iterations"] = iterations_json(result);
            results["iteration_count"] = static_cast<int>(result.iterations.size());
            results["removed_count"] = static_cast<int>(result.removed.size());
            results["remainder_planar"] = result.remainder_planar;
            report["results"] = std::move(results);
            report["timing_ms"] = timer.json();
            emit(report, planarize_output, out);
            return 0;
        }

        if (separator->parsed()) {
            timer.start("parse");
            const auto loaded = load_graph(separator_input);
            timer.stop();
            require_root(loaded.graph, separator_root);
            timer.start("separator");
            const auto tree = shortest_path_tree(loaded.graph, separator_root);
            const auto leaves = approximate_path_separator(loaded.graph, tree,
                                                           loaded.graph.vertex_weights(),
                                                           separator_alpha);
            const auto mask = root_paths_mask(tree, leaves);
            const double balance =
                balance_after_removal(loaded.graph, loaded.graph.vertex_weights(), mask);
            timer.stop();

            auto report = base_report(command, loaded.digest, 0);
            ordered_json results = ordered_json::object();
            results["n"] = loaded.graph.num_vertices();
            results["m"] = loaded.graph.num_edges();
            results["root"] = separator_root;
            results["alpha"] = separator_alpha;
            results["leaves"] = leaves;
            results["leaf_count"] = static_cast<int>(leaves.size());
            results["achieved_balance"] = balance;
            const bool ok = balance <= separator_alpha + kTol;
            results["balance_ok"] = ok;
            report["results"] = std::move(results);
            report["timing_ms"] = timer.json();
            emit(report, separator_output, out);
            if (!ok) {
                err << "contract violation: alpha-balanced vertex separator\n";
                return 1;
            }
            return 0;
        }

        if (embed->parsed()) {
            timer.start("parse");
            const auto loaded = load_graph(embed_input);
            timer.stop();
            require_root(loaded.graph, embed_root);
            if (embed_samples < 1) throw ContractViolation("samples >= 1");
            const HostBackend backend = parse_backend(embed_backend);
            timer.start("planarize");
            const auto result = planarizing_path_roots(loaded.graph, embed_root);
            timer.stop();

            timer.start("sample");
            std::filesystem::create_directories(embed_dir);
            ordered_json hosts = ordered_json::array();
            bool all_ok = true;
            for (int i = 1; i <= embed_samples; ++i) {
                const auto sample = sample_planar_host(loaded.graph, result,
                                                       embed_seed + static_cast<std::uint64_t>(i),
                                                       backend);
                const auto verdictH = is_planar(sample.host);
                const auto check = verify_noncontraction(loaded.graph, sample);
                char name[32];
                std::snprintf(name, sizeof(name), "host_%06d.graph", i);
                const auto path = std::filesystem::path(embed_dir) / name;
                write_graph_file(sample.host, path.string());

                ordered_json entry = ordered_json::object();
                entry["index"] = i;
                entry["seed"] = sample.seed;
                entry["file"] = path.string();
                entry["edges"] = sample.host.num_edges();
                entry["planar"] = verdictH.planar;
                entry["spanning_connected_subgraph"] = check.failure.empty() || check.ok;
                entry["noncontraction_ok"] = check.ok;
                entry["worst_ratio"] = check.worst_ratio;
                hosts.push_back(std::move(entry));
                all_ok = all_ok && check.ok && verdictH.planar;
            }
            timer.stop();

            auto report = base_report(command, loaded.digest, embed_seed);
            ordered_json results = ordered_json::object();
            results["n"] = loaded.graph.num_vertices();
            results["m"] = loaded.graph.num_edges();
            results["root"] = embed_root;
            results["samples"] = embed_samples;
            results["backend"] = embed_backend;
            results["out_dir"] = embed_dir;
            results["hosts"] = std::move(hosts);
            results["all_ok"] = all_ok;
            report["results"] = std::move(results);
            report["timing_ms"] = timer.json();
            emit(report, embed_output, out);
            if (!all_ok) {
                err << "contract violation: PlanarHostSample invariants\n";
                return 1;
            }
            return 0;
        }

        if (distortion->parsed()) {
            timer.start("parse");
            const auto loaded = load_graph(distortion_input);
            timer.stop();
            require_root(loaded.graph, distortion_root);
            const HostBackend backend = parse_backend(distortion_backend);
            timer.start("planarize");
            const auto result = planarizing_path_roots(loaded.graph, distortion_root);
            timer.stop();
            timer.start("distortion");
            const auto estimate = estimate_distortion(loaded.graph, result, distortion_samples,
                                                      distortion_seed, backend);
            timer.stop();

            auto report = base_report(command, loaded.digest, distortion_seed);
            ordered_json results = ordered_json::object();
            results["n"] = loaded.graph.num_vertices();
            results["m"] = loaded.graph.num_edges();
            results["root"] = distortion_root;
            results["samples"] = estimate.samples;
            results["backend"] = estimate.backend;
            results["d_hat"] = estimate.d_hat;
            results["argmax_pair"] = ordered_json::array({estimate.argmax_x, estimate.argmax_y});
            results["max_single_sample_expansion"] = estimate.max_single_sample_expansion;
            results["pairs_evaluated"] = static_cast<int>(estimate.pair_stats.size());
            constexpr std::size_t kPairStatsCap = 5000;
            if (estimate.pair_stats.size() <= kPairStatsCap) {
                ordered_json stats = ordered_json::array();
                for (const auto& p : estimate.pair_stats) {
                    ordered_json row = ordered_json::object();
                    row["x"] = p.x;
                    row["y"] = p.y;
                    row["distance"] = p.distance;
                    row["mean_host_distance"] = p.mean_host;
                    stats.push_back(std::move(row));
                }
                results["pair_stats"] = std::move(stats);
            } else {
                results["pair_stats_omitted"] = true;
            }
            report["results"] = std::move(results);
            report["timing_ms"] = timer.json();
            emit(report, distortion_output, out);
            return 0;
        }

        if (mst->parsed()) {
            timer.start("parse");
            const auto loaded = load_graph(mst_input);
            timer.stop();
            require_root(loaded.graph, mst_root);
            const HostBackend backend = parse_backend(mst_backend);
            timer.start("planarize");
            const auto result = planarizing_path_roots(loaded.graph, mst_root);
            timer.stop();
            timer.start("mst");
            const auto demo = mst_reduction_demo(loaded.graph, result, mst_samples, mst_seed, backend);
            timer.stop();

            auto report = base_report(command, loaded.digest, mst_seed);
            ordered_json results = ordered_json::object();
            results["n"] = loaded.graph.num_vertices();
            results["m"] = loaded.graph.num_edges();
            results["root"] = mst_root;
            results["samples"] = demo.samples;
            results["backend"] = demo.backend;
            results["mst_g"] = demo.mst_g;
            results["mean_mst_host"] = demo.mean_mst_host;
            results["ratio"] = demo.ratio;
            report["results"] = std::move(results);
            report["timing_ms"] = timer.json();
            emit(report, mst_output, out);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "contract violation: input format (" << e.what() << ")\n";
        return 1;
    } catch (const ContractViolation& e) {
        err << "contract violation: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace pathsep
