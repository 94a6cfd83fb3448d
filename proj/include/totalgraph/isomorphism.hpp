// Graph isomorphism by iterated neighbourhood refinement plus backtracking.
// Intended for the small graphs handled here (a few dozen vertices); no
// external canonical-labelling machinery is required at that scale.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "totalgraph/graph.hpp"

namespace totalgraph {

inline std::vector<int> per_vertex_triangle_counts(const Graph& g) {
    std::vector<int> t(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (g.adjacent(nb[i], nb[j])) ++t[v];
    }
    return t;
}

inline long long triangle_count(const Graph& g) {
    long long total = 0;
    for (int c : per_vertex_triangle_counts(g)) total += c;
    return total / 3;
}

// One round of colour refinement: the new colour of v is (old colour,
// sorted multiset of neighbour colours). Colour ids are assigned by the
// sorted order of those signatures, so they are isomorphism-invariant.
inline std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
    const int n = g.vertex_count();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(colors[v]);
            for (int w : g.neighbors(v)) s.push_back(colors[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        std::vector<int> fresh(n);
        for (const auto& [s, v] : sig) fresh[v] = rank.at(s);
        if (fresh == colors) return colors;
        colors = std::move(fresh);
    }
}

// Initial colours: (degree, triangle participation), ranked canonically.
inline std::vector<int> stable_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> tri = per_vertex_triangle_counts(g);
    std::vector<std::pair<std::pair<int, int>, int>> keyed(n);
    for (int v = 0; v < n; ++v) keyed[v] = {{g.degree(v), tri[v]}, v};
    std::map<std::pair<int, int>, int> rank;
    for (const auto& [key, v] : keyed) rank.emplace(key, 0);
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    std::vector<int> colors(n);
    for (const auto& [key, v] : keyed) colors[v] = rank.at(key);
    return refine_colors(g, colors);
}

namespace detail {

inline bool color_histograms_match(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    const std::vector<int>& cg;
    const std::vector<int>& ch;
    std::vector<int> map_gh;   // g index -> h index or -1
    std::vector<char> used_h;

    bool run(int assigned) {
        const int n = g.vertex_count();
        if (assigned == n) return true;
        // Most-constrained next vertex: maximise already-mapped neighbours,
        // break ties by ascending index.
        int best = -1, best_mapped = -1;
        for (int v = 0; v < n; ++v) {
            if (map_gh[v] >= 0) continue;
            int mapped = 0;
            for (int w : g.neighbors(v))
                if (map_gh[w] >= 0) ++mapped;
            if (mapped > best_mapped) {
                best_mapped = mapped;
                best = v;
            }
        }
        const int v = best;
        for (int cand = 0; cand < n; ++cand) {
            if (used_h[cand] || ch[cand] != cg[v]) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (map_gh[u] >= 0 && g.adjacent(v, u) != h.adjacent(cand, map_gh[u])) ok = false;
            if (!ok) continue;
            map_gh[v] = cand;
            used_h[cand] = 1;
            if (run(assigned + 1)) return true;
            map_gh[v] = -1;
            used_h[cand] = 0;
        }
        return false;
    }
};

} // namespace detail

// Mapping m with m[v_of_g] = vertex of h, or nullopt.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    std::vector<int> cg = stable_colors(g);
    std::vector<int> ch = stable_colors(h);
    if (!detail::color_histograms_match(cg, ch)) return std::nullopt;
    detail::IsoSearch search{g, h, cg, ch,
                             std::vector<int>(g.vertex_count(), -1),
                             std::vector<char>(g.vertex_count(), 0)};
    if (search.run(0)) return search.map_gh;
    return std::nullopt;
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
    return find_isomorphism(g, h).has_value();
}

} // namespace totalgraph
