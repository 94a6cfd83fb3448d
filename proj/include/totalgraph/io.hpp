// Text formats: the edge-list graph format and the labelling block.
//
// Graph format: one header line "n m", then m lines "u v". Writers emit
// edges in ascending lexicographic order with u < v; readers also accept
// reversed or repeated pairs, blank lines and '#' comments.
//
// Labelling block: one line per vertex of the labelled graph, either
// "v <i>" (vertex-vertex standing for vertex i of the source graph) or
// "e <u> <v>" (edge-vertex standing for source edge {u, v}).
#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "totalgraph/analysis.hpp"
#include "totalgraph/graph.hpp"

namespace totalgraph {

namespace detail {

// Yields payload lines: comments and blank lines are skipped.
inline bool next_payload_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t at = line.find_first_not_of(" \t\r");
        if (at == std::string::npos) continue;
        if (line[at] == '#') continue;
        return true;
    }
    return false;
}

inline std::vector<long long> parse_ints(const std::string& line, size_t want,
                                         const std::string& what) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long x;
    while (ss >> x) out.push_back(x);
    if (!ss.eof() || out.size() != want)
        throw std::invalid_argument("malformed " + what + " line: \"" + line + "\"");
    return out;
}

} // namespace detail

inline Graph parse_graph(std::istream& in) {
    std::string line;
    if (!detail::next_payload_line(in, line))
        throw std::invalid_argument("missing graph header line");
    auto header = detail::parse_ints(line, 2, "graph header");
    const long long n = header[0], m = header[1];
    if (n <= 0) throw std::invalid_argument("graph must have at least one vertex");
    if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("edge count out of range");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_payload_line(in, line))
            throw std::invalid_argument("unexpected end of input: expected " +
                                        std::to_string(m) + " edges");
        auto e = detail::parse_ints(line, 2, "edge");
        if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n)
            throw std::invalid_argument("edge endpoint out of range: \"" + line + "\"");
        edges.push_back({static_cast<int>(e[0]), static_cast<int>(e[1])});
    }
    return from_edge_list(static_cast<int>(n), edges);
}

inline void format_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const Graph& g) {
    std::ostringstream ss;
    format_graph(ss, g);
    return ss.str();
}

// Emits the block for a labelled graph. Vertex-vertices are numbered by
// ascending host index; edge endpoints are written in those numbers.
inline void format_labeling(std::ostream& out, const Graph& h, const PartitionLabeling& lab) {
    if (lab.kinds.size() != static_cast<size_t>(h.vertex_count()) ||
        lab.endpoints.size() != lab.kinds.size())
        throw std::invalid_argument("format_labeling: labeling size mismatch");
    std::vector<int> rank(h.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (lab.kinds[v] == VertexKind::VertexVertex) rank[v] = next++;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (lab.kinds[v] == VertexKind::VertexVertex) {
            out << "v " << rank[v] << '\n';
        } else {
            const auto& [a, b] = lab.endpoints[v];
            if (a < 0 || b < 0 || rank[a] < 0 || rank[b] < 0)
                throw std::invalid_argument("format_labeling: edge-vertex endpoints unlabeled");
            int ra = rank[a], rb = rank[b];
            out << "e " << std::min(ra, rb) << ' ' << std::max(ra, rb) << '\n';
        }
    }
}

// Reads a labelling block for h and resolves it back to host indices.
inline PartitionLabeling parse_labeling(std::istream& in, const Graph& h) {
    const int n = h.vertex_count();
    PartitionLabeling lab;
    lab.kinds.assign(n, VertexKind::VertexVertex);
    lab.endpoints.assign(n, {-1, -1});
    std::vector<std::pair<int, int>> raw(n, {-1, -1}); // edge lines, source numbering
    std::vector<int> source_of(n, -1);                 // vertex lines
    std::string line;
    for (int v = 0; v < n; ++v) {
        if (!detail::next_payload_line(in, line))
            throw std::invalid_argument("labeling block ended early: expected " +
                                        std::to_string(n) + " lines");
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        std::string rest;
        std::getline(ss, rest);
        if (tag == "v") {
            auto xs = detail::parse_ints(rest, 1, "labeling");
            lab.kinds[v] = VertexKind::VertexVertex;
            source_of[v] = static_cast<int>(xs[0]);
        } else if (tag == "e") {
            auto xs = detail::parse_ints(rest, 2, "labeling");
            lab.kinds[v] = VertexKind::EdgeVertex;
            raw[v] = {static_cast<int>(xs[0]), static_cast<int>(xs[1])};
        } else {
            throw std::invalid_argument("malformed labeling line: \"" + line + "\"");
        }
    }
    // Source vertex numbers must form 0..nv-1, each exactly once.
    int nv = 0;
    for (int v = 0; v < n; ++v)
        if (lab.kinds[v] == VertexKind::VertexVertex) ++nv;
    std::vector<int> host_of(nv, -1);
    for (int v = 0; v < n; ++v) {
        if (lab.kinds[v] != VertexKind::VertexVertex) continue;
        int s = source_of[v];
        if (s < 0 || s >= nv || host_of[s] != -1)
            throw std::invalid_argument("labeling vertex numbers are not 0.." +
                                        std::to_string(nv - 1) + " exactly once");
        host_of[s] = v;
    }
    for (int v = 0; v < n; ++v) {
        if (lab.kinds[v] != VertexKind::EdgeVertex) continue;
        auto [a, b] = raw[v];
        if (a < 0 || b < 0 || a >= nv || b >= nv || a == b)
            throw std::invalid_argument("labeling edge endpoints out of range");
        lab.endpoints[v] = make_edge(host_of[a], host_of[b]);
    }
    return lab;
}

} // namespace totalgraph
