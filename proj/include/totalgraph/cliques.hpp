// Clique search helpers: fixed-size clique lookup, greedy extension and
// maximal-clique enumeration (Bron-Kerbosch with pivoting).
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "totalgraph/graph.hpp"

namespace totalgraph {

namespace detail {

inline bool clique_extend(const Graph& g, std::vector<int>& clique,
                          const std::vector<int>& candidates, int want) {
    if (static_cast<int>(clique.size()) == want) return true;
    int need = want - static_cast<int>(clique.size());
    if (static_cast<int>(candidates.size()) < need) return false;
    for (size_t i = 0; i < candidates.size(); ++i) {
        int v = candidates[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < candidates.size(); ++j)
            if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
        clique.push_back(v);
        if (clique_extend(g, clique, next, want)) return true;
        clique.pop_back();
    }
    return false;
}

} // namespace detail

// Lexicographically smallest clique of exactly k vertices, if any.
inline std::optional<VertexSet> find_clique_of_size(const Graph& g, int k) {
    if (k < 1 || k > g.vertex_count()) return std::nullopt;
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    std::vector<int> clique;
    if (detail::clique_extend(g, clique, all, k)) return clique;
    return std::nullopt;
}

// Repeatedly adds the lowest-index common neighbour until maximal.
inline VertexSet greedy_extend_clique(const Graph& g, const VertexSet& seed) {
    if (!is_vertex_set(g, seed) || seed.empty())
        throw std::invalid_argument("greedy_extend_clique: invalid seed set");
    if (!is_clique(g, seed))
        throw std::invalid_argument("greedy_extend_clique: seed is not a clique");
    VertexSet clique = seed;
    for (;;) {
        int pick = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (std::binary_search(clique.begin(), clique.end(), v)) continue;
            bool all = true;
            for (int c : clique)
                if (!g.adjacent(v, c)) {
                    all = false;
                    break;
                }
            if (all) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return clique;
        clique.insert(std::lower_bound(clique.begin(), clique.end(), pick), pick);
    }
}

inline bool is_maximal_clique(const Graph& g, const VertexSet& s) {
    if (!is_clique(g, s) || s.empty()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        bool all = true;
        for (int c : s)
            if (!g.adjacent(v, c)) {
                all = false;
                break;
            }
        if (all) return false;
    }
    return true;
}

namespace detail {

inline void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p,
                          std::vector<int> x, const std::function<void(const VertexSet&)>& emit) {
    if (p.empty() && x.empty()) {
        VertexSet clique = r;
        std::sort(clique.begin(), clique.end());
        emit(clique);
        return;
    }
    // Pivot: vertex of p union x covering the most of p; ties to lowest index.
    int pivot = -1, best = -1;
    for (const auto* side : {&p, &x})
        for (int u : *side) {
            int cover = 0;
            for (int v : p)
                if (g.adjacent(u, v)) ++cover;
            if (cover > best) {
                best = cover;
                pivot = u;
            }
        }
    std::vector<int> branch;
    for (int v : p)
        if (pivot < 0 || !g.adjacent(pivot, v)) branch.push_back(v);
    for (int v : branch) {
        std::vector<int> p2, x2;
        for (int w : p)
            if (g.adjacent(v, w)) p2.push_back(w);
        for (int w : x)
            if (g.adjacent(v, w)) x2.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), emit);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

} // namespace detail

inline void for_each_maximal_clique(const Graph& g,
                                    const std::function<void(const VertexSet&)>& emit) {
    std::vector<int> r, p(g.vertex_count()), x;
    for (int v = 0; v < g.vertex_count(); ++v) p[v] = v;
    detail::bron_kerbosch(g, r, std::move(p), std::move(x), emit);
}

inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_clique(g, [&](const VertexSet& c) { out.push_back(c); });
    std::sort(out.begin(), out.end());
    return out;
}

// All maximal cliques of g that contain every vertex of seed.
inline std::vector<VertexSet> maximal_cliques_containing(const Graph& g, const VertexSet& seed) {
    if (!is_vertex_set(g, seed) || seed.empty())
        throw std::invalid_argument("maximal_cliques_containing: invalid seed set");
    if (!is_clique(g, seed))
        throw std::invalid_argument("maximal_cliques_containing: seed is not a clique");
    std::vector<int> r = seed, p, x;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (std::binary_search(seed.begin(), seed.end(), v)) continue;
        bool all = true;
        for (int s : seed)
            if (!g.adjacent(v, s)) {
                all = false;
                break;
            }
        if (all) p.push_back(v);
    }
    std::vector<VertexSet> out;
    detail::bron_kerbosch(g, r, std::move(p), std::move(x),
                          [&](const VertexSet& c) { out.push_back(c); });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace totalgraph
