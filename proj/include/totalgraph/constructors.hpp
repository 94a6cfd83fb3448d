// Graph families plus the line-graph and total-graph constructions.
// A total graph keeps one vertex per vertex and one per edge of the source
// graph; adjacency mirrors source adjacency, edge intersection and incidence.
#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "totalgraph/graph.hpp"
#include "totalgraph/isomorphism.hpp"

namespace totalgraph {

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, edges);
}

// Vertices 0..n-1 with i adjacent to i +- d (mod n) for every offset d.
inline Graph circulant_graph(int n, const std::vector<int>& offsets) {
    if (n < 1) throw std::invalid_argument("circulant_graph: n must be positive");
    std::vector<Edge> edges;
    for (int d : offsets) {
        if (d <= 0 || d >= n) throw std::invalid_argument("circulant_graph: offset out of range");
        for (int i = 0; i < n; ++i)
            if (i != (i + d) % n) edges.push_back(make_edge(i, (i + d) % n));
    }
    return Graph(n, edges);
}

struct LineGraphResult {
    Graph graph;
    // source_edges[i] is the edge of the source graph behind vertex i.
    std::vector<Edge> source_edges;
};

// Vertex i of the result is edges()[i] of g; two vertices are adjacent
// exactly when the underlying edges share an endpoint.
inline LineGraphResult line_graph(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::domain_error("line_graph: source graph has no edges");
    const auto& es = g.edges();
    std::vector<Edge> out;
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            const auto& [a, b] = es[i];
            const auto& [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                out.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    return {Graph(static_cast<int>(es.size()), out), es};
}

struct TotalGraphLayout {
    Graph graph;
    // vertex_part[i] is the result vertex standing for source vertex i.
    VertexSet vertex_part;
    // edge_part[t] is the source edge behind result vertex vertex_part.size()+t.
    std::vector<Edge> edge_part;
};

// Vertices 0..n-1 mirror the source vertices; vertex n+t stands for the
// t-th source edge in sorted order.
inline TotalGraphLayout total_graph(const Graph& g) {
    const int n = g.vertex_count();
    const auto& es = g.edges();
    std::vector<Edge> out(es.begin(), es.end()); // source adjacency survives
    for (size_t t = 0; t < es.size(); ++t) {
        const auto& [u, v] = es[t];
        int ev = n + static_cast<int>(t);
        out.push_back({u, ev}); // incidence
        out.push_back({v, ev});
        for (size_t s = t + 1; s < es.size(); ++s) {
            const auto& [a, b] = es[s];
            if (a == u || a == v || b == u || b == v)
                out.push_back({ev, n + static_cast<int>(s)}); // edges meeting
        }
    }
    TotalGraphLayout layout;
    layout.graph = Graph(n + static_cast<int>(es.size()), out);
    layout.vertex_part.resize(n);
    std::iota(layout.vertex_part.begin(), layout.vertex_part.end(), 0);
    layout.edge_part = es;
    return layout;
}

// Exact edge count of the total graph: source edges survive (|E|), each edge
// contributes two incidences (2|E|), and edges sharing an endpoint at v pair
// up C(deg v, 2) times.
inline long long expected_total_edge_count(const Graph& g) {
    long long m = g.edge_count();
    long long meet = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        long long d = g.degree(v);
        meet += d * (d - 1) / 2;
    }
    return 3 * m + meet;
}

// Total graph of the complete graph on n vertices, assembled from n+1
// groups that each contribute a complete graph on n labels. The j-th member
// of group i is glued to the i-th member of group j; gluing is carried out
// with a union-find over (group, label) slots and never cancels an edge.
inline TotalGraphLayout total_of_complete(int n) {
    if (n < 1) throw std::invalid_argument("total_of_complete: n must be positive");
    const int groups = n + 1;
    // Slot (i, j), i != j: member labelled j of group i, flattened row-major.
    auto slot = [&](int i, int j) { return i * groups + j; };
    std::vector<int> parent(groups * groups);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int i = 0; i < groups; ++i)
        for (int j = i + 1; j < groups; ++j)
            parent[find(slot(j, i))] = find(slot(i, j));

    // Each group spans a complete graph on its n member slots.
    std::vector<std::pair<int, int>> raw_edges;
    for (int i = 0; i < groups; ++i)
        for (int a = 0; a < groups; ++a) {
            if (a == i) continue;
            for (int b = a + 1; b < groups; ++b) {
                if (b == i) continue;
                raw_edges.push_back({find(slot(i, a)), find(slot(i, b))});
            }
        }

    // Canonical numbering of the merged slots: the class of slot (i, j) is
    // the unordered pair {i, j}. Pairs touching the last group become the
    // vertex part, the remaining pairs the edge part in sorted order.
    std::vector<int> number(groups * groups, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) number[find(slot(i, n))] = next++;
    std::vector<Edge> edge_part;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            number[find(slot(i, j))] = next++;
            edge_part.push_back({i, j});
        }

    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (auto [a, b] : raw_edges) edges.push_back(make_edge(number[a], number[b]));

    TotalGraphLayout layout;
    layout.graph = Graph(next, edges);
    layout.vertex_part.resize(n);
    std::iota(layout.vertex_part.begin(), layout.vertex_part.end(), 0);
    layout.edge_part = std::move(edge_part);
    return layout;
}

// Total graph of the n-cycle built straight from its interleaving shape:
// two disjoint n-cycles (vertex part 0..n-1, edge part n..2n-1) tied
// together by the alternating spanning cycle 0, n, 1, n+1, ..., n-1, 2n-1.
inline TotalGraphLayout total_of_cycle(int n) {
    if (n < 3) throw std::invalid_argument("total_of_cycle: n must be at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back(make_edge(i, (i + 1) % n));         // first cycle
        edges.push_back(make_edge(n + i, n + (i + 1) % n)); // second cycle
        edges.push_back(make_edge(i, n + i));               // interleave out
        edges.push_back(make_edge(n + i, (i + 1) % n));     // interleave back
    }
    TotalGraphLayout layout;
    layout.graph = Graph(2 * n, edges);
    layout.vertex_part.resize(n);
    std::iota(layout.vertex_part.begin(), layout.vertex_part.end(), 0);
    for (int i = 0; i < n; ++i) layout.edge_part.push_back(make_edge(i, (i + 1) % n));
    return layout;
}

// Total graph of the n-vertex path, by the same interleaving idea: paths on
// 0..n-1 and n..2n-2 joined by the alternating spanning path
// 0, n, 1, n+1, ..., n-2, 2n-2, n-1.
inline TotalGraphLayout total_of_path(int n) {
    if (n < 2) throw std::invalid_argument("total_of_path: n must be at least 2");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1}); // first path
        if (i + 2 < n) edges.push_back({n + i, n + i + 1}); // second path
        edges.push_back({i, n + i});     // interleave out
        edges.push_back({n + i, i + 1}); // interleave back
    }
    TotalGraphLayout layout;
    layout.graph = Graph(2 * n - 1, edges);
    layout.vertex_part.resize(n);
    std::iota(layout.vertex_part.begin(), layout.vertex_part.end(), 0);
    for (int i = 0; i + 1 < n; ++i) layout.edge_part.push_back({i, i + 1});
    return layout;
}

// Witness that a graph carries the interleaved two-cycle (or two-path)
// shape of a cycle/path total graph.
struct StructureCertificate {
    bool cyclic = false;
    std::vector<int> first_sequence;       // vertex-part cycle or path
    std::vector<int> second_sequence;      // edge-part cycle or path
    std::vector<int> interleaved_sequence; // alternating spanning cycle or path
};

struct StructureCheck {
    std::optional<StructureCertificate> certificate;
    std::string refusal;
};

namespace detail {

inline StructureCheck structure_check(const Graph& h, int n, bool cyclic) {
    const char* shape = cyclic ? "cycle" : "path";
    if (cyclic && n < 3)
        return {std::nullopt, std::string("refused: ") + shape + " order below minimum"};
    if (!cyclic && n < 2)
        return {std::nullopt, std::string("refused: ") + shape + " order below minimum"};
    const int want_v = cyclic ? 2 * n : 2 * n - 1;
    const long long want_e = cyclic ? 4LL * n : 4LL * n - 5;
    if (h.vertex_count() != want_v)
        return {std::nullopt, "refused: vertex count " + std::to_string(h.vertex_count()) +
                                  " differs from " + std::to_string(want_v)};
    if (h.edge_count() != want_e)
        return {std::nullopt, "refused: edge count " + std::to_string(h.edge_count()) +
                                  " differs from " + std::to_string(want_e)};
    TotalGraphLayout ref = cyclic ? total_of_cycle(n) : total_of_path(n);
    auto iso = find_isomorphism(ref.graph, h);
    if (!iso)
        return {std::nullopt, std::string("refused: not isomorphic to the ") + shape +
                                  " total graph on " + std::to_string(n) + " vertices"};
    StructureCertificate cert;
    cert.cyclic = cyclic;
    const int second = cyclic ? n : n - 1;
    for (int i = 0; i < n; ++i) cert.first_sequence.push_back((*iso)[i]);
    for (int i = 0; i < second; ++i) cert.second_sequence.push_back((*iso)[n + i]);
    for (int i = 0; i < n; ++i) {
        cert.interleaved_sequence.push_back((*iso)[i]);
        if (i < second) cert.interleaved_sequence.push_back((*iso)[n + i]);
    }
    return {cert, ""};
}

} // namespace detail

inline StructureCheck check_total_of_cycle(const Graph& h, int n) {
    return detail::structure_check(h, n, true);
}

inline StructureCheck check_total_of_path(const Graph& h, int n) {
    return detail::structure_check(h, n, false);
}

// Validates a certificate against the graph it came from: the two base
// sequences must partition the vertices, trace disjoint cycles/paths, and
// the interleaved sequence must alternate between them, span the graph, and
// use only edges outside both bases.
inline bool certificate_is_valid(const Graph& h, const StructureCertificate& cert) {
    const auto& a = cert.first_sequence;
    const auto& b = cert.second_sequence;
    const auto& w = cert.interleaved_sequence;
    if (a.size() + b.size() != static_cast<size_t>(h.vertex_count())) return false;
    if (w.size() != a.size() + b.size()) return false;
    std::vector<char> seen(h.vertex_count(), 0);
    for (int v : a) {
        if (v < 0 || v >= h.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    for (int v : b) {
        if (v < 0 || v >= h.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    std::vector<Edge> used;
    auto walk = [&](const std::vector<int>& seq, bool close) {
        size_t steps = seq.size() - (close ? 0 : 1);
        for (size_t i = 0; i < steps; ++i) {
            int u = seq[i], v = seq[(i + 1) % seq.size()];
            if (!h.adjacent(u, v)) return false;
            used.push_back(make_edge(u, v));
        }
        return true;
    };
    if (a.size() > 1 && !walk(a, cert.cyclic)) return false;
    if (b.size() > 1 && !walk(b, cert.cyclic)) return false;
    size_t base_edges = used.size();
    if (!walk(w, cert.cyclic)) return false;
    // Alternation between the two parts.
    std::vector<char> in_a(h.vertex_count(), 0);
    for (int v : a) in_a[v] = 1;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (in_a[w[i]] == in_a[w[i + 1]]) return false;
    // Interleaved edges must avoid both base sequences.
    std::sort(used.begin(), used.begin() + base_edges);
    for (size_t i = base_edges; i < used.size(); ++i)
        if (std::binary_search(used.begin(), used.begin() + base_edges, used[i])) return false;
    return true;
}

} // namespace totalgraph
