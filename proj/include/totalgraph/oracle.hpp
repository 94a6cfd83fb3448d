// Brute-force reference machinery: exhaustive enumeration of connected
// graphs up to isomorphism (edge-subset sweep with canonical-code
// deduplication) and the exhaustive total-graph inverse search.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "totalgraph/constructors.hpp"
#include "totalgraph/graph.hpp"
#include "totalgraph/isomorphism.hpp"

namespace totalgraph {

namespace detail {

// Adjacency-mask graph for the enumeration hot path (at most 8 vertices).
struct SmallGraph {
    int n = 0;
    std::array<uint8_t, 8> adj{};
};

inline bool small_connected(const SmallGraph& g) {
    uint8_t reach = 1, frontier = 1;
    const uint8_t all = static_cast<uint8_t>((1u << g.n) - 1);
    while (frontier) {
        uint8_t next = 0;
        uint8_t f = frontier;
        while (f) {
            int v = std::countr_zero(static_cast<unsigned>(f));
            f &= static_cast<uint8_t>(f - 1);
            next |= g.adj[v];
        }
        frontier = static_cast<uint8_t>(next & ~reach);
        reach |= next;
    }
    return reach == all;
}

// Colour refinement packed into 32-bit signatures: low 24 bits hold a
// 3-bit histogram of neighbour colours, high bits the current colour.
inline void small_refine(const SmallGraph& g, std::array<int, 8>& color) {
    const int n = g.n;
    std::array<uint32_t, 8> sig{};
    std::array<uint32_t, 8> sorted{};
    for (;;) {
        for (int v = 0; v < n; ++v) {
            uint32_t s = static_cast<uint32_t>(color[v]) << 24;
            uint8_t m = g.adj[v];
            while (m) {
                int w = std::countr_zero(static_cast<unsigned>(m));
                m &= static_cast<uint8_t>(m - 1);
                s += 1u << (3 * color[w]);
            }
            sig[v] = s;
        }
        for (int v = 0; v < n; ++v) sorted[v] = sig[v];
        std::sort(sorted.begin(), sorted.begin() + n);
        int classes = 0;
        std::array<uint32_t, 8> distinct{};
        for (int v = 0; v < n; ++v)
            if (v == 0 || sorted[v] != sorted[v - 1]) distinct[classes++] = sorted[v];
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int c = static_cast<int>(std::lower_bound(distinct.begin(),
                                                      distinct.begin() + classes, sig[v]) -
                                     distinct.begin());
            if (c != color[v]) changed = true;
            color[v] = c;
        }
        if (!changed || classes == n) return;
    }
}

// Minimum upper-triangle adjacency bit-string over all vertex orderings
// compatible with the refined colouring.
inline uint32_t small_canonical_code(const SmallGraph& g) {
    const int n = g.n;
    std::array<int, 8> color{};
    for (int v = 0; v < n; ++v) color[v] = std::popcount(static_cast<unsigned>(g.adj[v]));
    {
        // Rank initial degrees canonically.
        std::array<int, 8> sorted = color;
        std::sort(sorted.begin(), sorted.begin() + n);
        std::array<int, 8> tmp{};
        int classes = 0;
        for (int v = 0; v < n; ++v)
            if (v == 0 || sorted[v] != sorted[v - 1]) tmp[classes++] = sorted[v];
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(tmp.begin(), tmp.begin() + classes,
                                                         color[v]) -
                                        tmp.begin());
    }
    small_refine(g, color);

    std::vector<std::vector<int>> cells;
    for (int c = 0; c < n; ++c) {
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (color[v] == c) cell.push_back(v);
        if (!cell.empty()) cells.push_back(std::move(cell));
    }

    uint32_t best = ~0u;
    std::array<int, 8> perm{};
    auto evaluate = [&] {
        uint32_t code = 0;
        for (int i = 0; i < n; ++i) {
            uint8_t row = g.adj[perm[i]];
            for (int j = i + 1; j < n; ++j) code = (code << 1) | ((row >> perm[j]) & 1u);
        }
        if (code < best) best = code;
    };
    auto sweep = [&](auto&& self, size_t ci, int at) -> void {
        if (ci == cells.size()) {
            evaluate();
            return;
        }
        std::vector<int>& cell = cells[ci];
        std::sort(cell.begin(), cell.end());
        do {
            for (size_t i = 0; i < cell.size(); ++i) perm[at + i] = cell[i];
            self(self, ci + 1, at + static_cast<int>(cell.size()));
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    sweep(sweep, 0, 0);
    return best;
}

} // namespace detail

// Calls visit once per isomorphism class of connected graphs on n vertices,
// in the deterministic order of the underlying edge-subset sweep. visit may
// return false to stop early. Supported for 1 <= n <= 8 (n = 8 is slow).
inline void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& visit) {
    if (n < 1 || n > 8)
        throw std::domain_error("for_each_connected_graph: n must be between 1 and 8");
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    const int bits = static_cast<int>(slots.size());
    std::unordered_set<uint32_t> seen;
    for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
        detail::SmallGraph sg;
        sg.n = n;
        uint64_t m = mask;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            auto [u, v] = slots[b];
            sg.adj[u] |= static_cast<uint8_t>(1u << v);
            sg.adj[v] |= static_cast<uint8_t>(1u << u);
        }
        if (!detail::small_connected(sg)) continue;
        if (!seen.insert(detail::small_canonical_code(sg)).second) continue;
        std::vector<Edge> edges;
        uint64_t m2 = mask;
        while (m2) {
            int b = std::countr_zero(m2);
            m2 &= m2 - 1;
            edges.push_back(slots[b]);
        }
        if (!visit(Graph(n, edges))) return;
    }
}

struct GraphCensus {
    int vertex_count = 0;
    long long count = 0;
    std::vector<Graph> graphs; // one representative per isomorphism class
};

inline GraphCensus enumerate_connected_graphs(int n) {
    GraphCensus census;
    census.vertex_count = n;
    for_each_connected_graph(n, [&](const Graph& g) {
        census.graphs.push_back(g);
        ++census.count;
        return true;
    });
    return census;
}

// Exhaustive inverse: the connected graph whose total graph is isomorphic
// to h, if one exists. Kept honest by sheer enumeration; supported for
// hosts with at most 12 vertices.
inline std::optional<Graph> brute_force_inverse(const Graph& h) {
    if (h.vertex_count() > 12)
        throw std::domain_error("brute_force_inverse: supported up to 12 host vertices");
    if (!is_connected(h)) return std::nullopt;
    const int target = h.vertex_count();
    const std::vector<int> host_degrees = sorted_degree_sequence(h);
    for (int v = 1; v <= target; ++v) {
        const long long e = target - v;
        if (e < v - 1 || e > static_cast<long long>(v) * (v - 1) / 2) continue;
        std::optional<Graph> found;
        for_each_connected_graph(v, [&](const Graph& g) {
            if (g.edge_count() != e) return true;
            if (expected_total_edge_count(g) != h.edge_count()) return true;
            TotalGraphLayout t = total_graph(g);
            if (sorted_degree_sequence(t.graph) != host_degrees) return true;
            if (are_isomorphic(t.graph, h)) {
                found = g;
                return false;
            }
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

} // namespace totalgraph
