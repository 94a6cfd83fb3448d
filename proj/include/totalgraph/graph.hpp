// Undirected simple graphs with dense 0-based vertex indices.
// Graphs are immutable after construction and safe to share across threads.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace totalgraph {

using Edge = std::pair<int, int>;

// Sorted, duplicate-free list of vertex indices of some host graph.
using VertexSet = std::vector<int>;

inline Edge make_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    return {u, v};
}

class Graph {
public:
    Graph() = default;

    // Accepts duplicate and reversed pairs; they collapse to a single edge.
    // Rejects self-loops, out-of-range endpoints and empty vertex sets.
    Graph(int vertex_count, const std::vector<Edge>& pairs) : n_(vertex_count) {
        if (vertex_count <= 0)
            throw std::invalid_argument("graph needs at least one vertex");
        edges_.reserve(pairs.size());
        for (auto [u, v] : pairs) {
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw std::invalid_argument("edge endpoint out of range: (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            edges_.push_back(make_edge(u, v));
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

        adj_.assign(n_, {});
        words_ = (n_ + 63) / 64;
        bits_.assign(static_cast<size_t>(n_) * words_, 0);
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1} << (v % 64);
            bits_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t{1} << (u % 64);
        }
        for (auto& list : adj_) std::sort(list.begin(), list.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges in ascending lexicographic order, each with first < second.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
    }

    // Packed adjacency row, words_per_row() words per vertex.
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    int words_per_row() const { return words_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;
};

inline Graph from_edge_list(int vertex_count, const std::vector<Edge>& pairs) {
    return Graph(vertex_count, pairs);
}

inline int degree(const Graph& g, int v) { return g.degree(v); }

inline bool is_vertex_set(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count()) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

struct InducedSubgraph {
    Graph graph;
    // vertices[i] is the host index of subgraph vertex i.
    std::vector<int> vertices;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!is_vertex_set(g, s))
        throw std::invalid_argument("induced_subgraph: not a valid vertex set");
    if (s.empty())
        throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> local(g.vertex_count(), -1);
    for (size_t i = 0; i < s.size(); ++i) local[s[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (v < w && local[w] >= 0) edges.push_back({local[v], local[w]});
    return {Graph(static_cast<int>(s.size()), edges), s};
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexSet> comps;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

inline int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

inline std::vector<int> sorted_degree_sequence(const Graph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

inline bool is_regular(const Graph& g) {
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

} // namespace totalgraph
