#include "pathsep/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pathsep/errors.hpp"

namespace pathsep {

namespace {

// Data lines of the stream: comments stripped, blanks skipped.
struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line line{number, {}};
        std::string token;
        while (ss >> token) line.tokens.push_back(token);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

long parse_int(const std::string& token, int line) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "expected integer, got '" + token + "'");
    return value;
}

double parse_real(const std::string& token, int line) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(token, &pos);
        if (pos != token.size()) throw ParseError(line, "expected number, got '" + token + "'");
        return value;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(line, "expected number, got '" + token + "'");
    }
}

Vertex parse_vertex(const std::string& token, int line, int n) {
    const long v = parse_int(token, line);
    if (v < 0 || v >= n)
        throw ParseError(line, "vertex " + token + " out of range [0," + std::to_string(n) + ")");
    return static_cast<Vertex>(v);
}

std::string format_real(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    const auto lines = tokenize(in);
    std::size_t at = 0;
    if (at >= lines.size()) throw ParseError(1, "missing header line 'n m'");
    const Line& header = lines[at++];
    if (header.tokens.size() != 2) throw ParseError(header.number, "header must be 'n m'");
    const long n = parse_int(header.tokens[0], header.number);
    const long m = parse_int(header.tokens[1], header.number);
    if (n < 0) throw ParseError(header.number, "negative vertex count");
    if (m < 0) throw ParseError(header.number, "negative edge count");

    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        if (at >= lines.size())
            throw ParseError(lines.back().number, "expected " + std::to_string(m) + " edges, got " +
                                                      std::to_string(i));
        const Line& line = lines[at++];
        if (line.tokens.size() != 3) throw ParseError(line.number, "edge line must be 'u v length'");
        const Vertex u = parse_vertex(line.tokens[0], line.number, g.num_vertices());
        const Vertex v = parse_vertex(line.tokens[1], line.number, g.num_vertices());
        const double length = parse_real(line.tokens[2], line.number);
        if (length < 0.0) throw ParseError(line.number, "negative length");
        if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw ParseError(line.number, "duplicate edge {" + std::to_string(u) + "," +
                                              std::to_string(v) + "}");
        g.add_edge(u, v, length);
    }

    if (at < lines.size()) {
        const Line& marker = lines[at++];
        if (marker.tokens.size() != 1 || marker.tokens[0] != "weights")
            throw ParseError(marker.number, "expected 'weights' section or end of file");
        for (long i = 0; i < n; ++i) {
            if (at >= lines.size())
                throw ParseError(lines.back().number, "expected " + std::to_string(n) +
                                                          " weight lines, got " + std::to_string(i));
            const Line& line = lines[at++];
            if (line.tokens.size() != 2) throw ParseError(line.number, "weight line must be 'v w'");
            const Vertex v = parse_vertex(line.tokens[0], line.number, g.num_vertices());
            const double w = parse_real(line.tokens[1], line.number);
            if (w < 0.0) throw ParseError(line.number, "negative weight");
            g.set_vertex_weight(v, w);
        }
    }
    if (at < lines.size()) throw ParseError(lines[at].number, "unexpected trailing content");
    return g;
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractViolation("input file readable", path);
    return parse_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    std::vector<Edge> sorted = g.edges();
    std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (const Edge& e : sorted)
        out << e.u << ' ' << e.v << ' ' << format_real(e.length) << '\n';
    if (g.has_nonuniform_weights()) {
        out << "weights\n";
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            out << v << ' ' << format_real(g.vertex_weight(v)) << '\n';
    }
}

std::string write_graph_string(const Graph& g) {
    std::ostringstream out;
    write_graph(g, out);
    return out.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ContractViolation("output file writable", path);
    write_graph(g, out);
}

}  // namespace pathsep
