// Structural analysis of candidate total graphs: the vertex-part /
// edge-part labelling certificate, the two neighbourhood characterisations
// used by recognition, counting identities and maximal-clique taxonomy.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "totalgraph/cliques.hpp"
#include "totalgraph/constructors.hpp"
#include "totalgraph/graph.hpp"

namespace totalgraph {

enum class VertexKind : unsigned char { VertexVertex, EdgeVertex };

// Certifies how a graph splits into vertex part and edge part. endpoints[v]
// names, for an edge-vertex v, its two vertex-vertex neighbours in the host
// graph (low endpoint first); vertex-vertices carry (-1, -1).
struct PartitionLabeling {
    std::vector<VertexKind> kinds;
    std::vector<Edge> endpoints;

    int vertex_part_size() const {
        int c = 0;
        for (VertexKind k : kinds)
            if (k == VertexKind::VertexVertex) ++c;
        return c;
    }
};

inline PartitionLabeling labeling_of(const TotalGraphLayout& layout) {
    PartitionLabeling lab;
    lab.kinds.assign(layout.graph.vertex_count(), VertexKind::EdgeVertex);
    lab.endpoints.assign(layout.graph.vertex_count(), {-1, -1});
    for (int host : layout.vertex_part) lab.kinds[host] = VertexKind::VertexVertex;
    const int base = static_cast<int>(layout.vertex_part.size());
    for (size_t t = 0; t < layout.edge_part.size(); ++t) {
        const auto& [u, v] = layout.edge_part[t];
        lab.endpoints[base + static_cast<int>(t)] =
            make_edge(layout.vertex_part[u], layout.vertex_part[v]);
    }
    return lab;
}

// A consistent way to read the neighbourhood of a degree-2k vertex as the
// neighbourhood of a vertex-vertex: k candidate neighbour vertices, k
// candidate incident edges, and the pairing between them.
struct NeighborhoodProfile {
    int center = -1;
    int k = 0;
    VertexSet vertex_group;
    VertexSet edge_group;
    // (edge_group member, its unique vertex_group partner).
    std::vector<std::pair<int, int>> pairs;
};

struct ProfileOptions {
    int cap = 64; // maximum number of profiles returned
};

namespace detail {

struct ProfileScan {
    std::vector<NeighborhoodProfile> profiles;
    bool truncated = false;
};

// Enumerates the candidate splits of N(center). A split survives when
//   - the edge group is a clique whose members all realise the maximum
//     induced-neighbourhood degree k (candidate edges meet at the centre),
//   - no member of the neighbourhood exceeds induced degree k and at least
//     one vertex-group member stays below it,
//   - every edge-group member sees exactly one vertex-group partner and the
//     pairing is a bijection,
//   - for each pair, the partner degree is even and twice the candidate
//     edge degree equals the centre degree plus the partner degree.
inline ProfileScan vertex_vertex_profile_scan(const Graph& h, int center,
                                              const ProfileOptions& opt) {
    ProfileScan scan;
    const int d = h.degree(center);
    if (d == 0 || d % 2 != 0) return scan;
    const int k = d / 2;
    VertexSet nbhd = h.neighbors(center); // sorted
    InducedSubgraph ind = induced_subgraph(h, nbhd);
    const int m = static_cast<int>(nbhd.size());

    std::vector<int> ind_deg(m);
    for (int i = 0; i < m; ++i) {
        ind_deg[i] = ind.graph.degree(i);
        if (ind_deg[i] > k) return scan; // induced maximum degree must be k
    }
    // Odd-degree members can never be matched as neighbour vertices, so
    // they are forced into the edge group; that requires induced degree k.
    std::vector<char> forced_edge(m, 0);
    for (int i = 0; i < m; ++i)
        if (h.degree(nbhd[i]) % 2 != 0) {
            if (ind_deg[i] != k) return scan;
            forced_edge[i] = 1;
        }

    std::vector<int> pool; // eligible edge-group members, ascending
    for (int i = 0; i < m; ++i)
        if (ind_deg[i] == k) pool.push_back(i);
    if (static_cast<int>(pool.size()) < k) return scan;

    std::vector<int> chosen;
    auto emit = [&](const std::vector<int>& edge_local) {
        std::vector<char> in_edge(m, 0);
        for (int i : edge_local) in_edge[i] = 1;
        for (int i = 0; i < m; ++i)
            if (forced_edge[i] && !in_edge[i]) return;
        bool falls_short = false;
        for (int i = 0; i < m; ++i)
            if (!in_edge[i] && ind_deg[i] < k) falls_short = true;
        if (!falls_short) return;
        // Unique partner for each candidate edge; partners pairwise distinct.
        std::vector<std::pair<int, int>> pairs;
        std::vector<char> matched(m, 0);
        for (int e : edge_local) {
            int partner = -1;
            for (int j : ind.graph.neighbors(e)) {
                if (in_edge[j]) continue;
                if (partner >= 0) return; // second partner
                partner = j;
            }
            if (partner < 0 || matched[partner]) return;
            matched[partner] = 1;
            const int eh = nbhd[e], ph = nbhd[partner];
            if (h.degree(ph) % 2 != 0) return;
            if (2 * h.degree(eh) != h.degree(center) + h.degree(ph)) return;
            pairs.push_back({eh, ph});
        }
        if (static_cast<int>(scan.profiles.size()) >= opt.cap) {
            scan.truncated = true; // a further valid profile exists beyond the cap
            return;
        }
        NeighborhoodProfile p;
        p.center = center;
        p.k = k;
        for (int e : edge_local) p.edge_group.push_back(nbhd[e]);
        for (int i = 0; i < m; ++i)
            if (!in_edge[i]) p.vertex_group.push_back(nbhd[i]);
        std::sort(pairs.begin(), pairs.end());
        p.pairs = std::move(pairs);
        scan.profiles.push_back(std::move(p));
    };

    // Ascending enumeration of k-cliques inside the eligible pool.
    auto extend = [&](auto&& self, size_t from) -> void {
        if (scan.truncated) return;
        if (static_cast<int>(chosen.size()) == k) {
            emit(chosen);
            return;
        }
        for (size_t idx = from; idx < pool.size(); ++idx) {
            int v = pool[idx];
            bool ok = true;
            for (int c : chosen)
                if (!ind.graph.adjacent(c, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            self(self, idx + 1);
            chosen.pop_back();
            if (scan.truncated) return;
        }
    };
    extend(extend, 0);
    return scan;
}

} // namespace detail

// All ways to read v as a vertex-vertex of its host graph. Results are in
// ascending lexicographic order of the edge group; at most opt.cap entries.
inline std::vector<NeighborhoodProfile> vertex_vertex_profiles(const Graph& h, int v,
                                                               const ProfileOptions& opt = {}) {
    return detail::vertex_vertex_profile_scan(h, v, opt).profiles;
}

// Witness for the edge-vertex reading of a degree-2k vertex: its
// neighbourhood splits into two maximal k-cliques, one per endpoint, and
// each side holds at least one even-degree candidate endpoint.
struct EdgeVertexWitness {
    bool passes = false;
    VertexSet clique_a;
    VertexSet clique_b;
};

inline EdgeVertexWitness edge_vertex_check(const Graph& h, int v) {
    const int d = h.degree(v);
    if (d == 0 || d % 2 != 0) return {};
    const int k = d / 2;
    VertexSet nbhd = h.neighbors(v);
    InducedSubgraph ind = induced_subgraph(h, nbhd);
    const int m = static_cast<int>(nbhd.size());

    auto maximal_in_nbhd = [&](const std::vector<int>& side, const std::vector<char>& member) {
        for (int u = 0; u < m; ++u) {
            if (member[u]) continue;
            bool extends = true;
            for (int s : side)
                if (!ind.graph.adjacent(u, s)) {
                    extends = false;
                    break;
                }
            if (extends) return false;
        }
        return true;
    };
    auto has_even_candidate = [&](const std::vector<int>& side) {
        for (int s : side)
            if (h.degree(nbhd[s]) % 2 == 0) return true;
        return false;
    };

    // Side A always contains local vertex 0; enumerate its k-subsets.
    std::vector<int> a{0};
    auto search = [&](auto&& self, int from) -> std::optional<EdgeVertexWitness> {
        if (static_cast<int>(a.size()) == k) {
            std::vector<char> in_a(m, 0);
            for (int s : a) in_a[s] = 1;
            std::vector<int> b;
            for (int u = 0; u < m; ++u)
                if (!in_a[u]) b.push_back(u);
            std::vector<char> in_b(m, 0);
            for (int s : b) in_b[s] = 1;
            if (!is_clique(ind.graph, b)) return std::nullopt;
            if (!maximal_in_nbhd(a, in_a) || !maximal_in_nbhd(b, in_b)) return std::nullopt;
            if (!has_even_candidate(a) || !has_even_candidate(b)) return std::nullopt;
            EdgeVertexWitness w;
            w.passes = true;
            for (int s : a) w.clique_a.push_back(nbhd[s]);
            for (int s : b) w.clique_b.push_back(nbhd[s]);
            return w;
        }
        for (int u = from; u < m; ++u) {
            bool ok = true;
            for (int s : a)
                if (!ind.graph.adjacent(u, s)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            a.push_back(u);
            if (auto w = self(self, u + 1)) return w;
            a.pop_back();
        }
        return std::nullopt;
    };
    if (auto w = search(search, 1)) return *w;
    return {};
}

// The three counting identities tying a source graph to its total graph:
// vertex count, the exact edge count, and the coarse edge bound.
inline bool count_check(const Graph& g, const Graph& h) {
    const long long n = g.vertex_count(), m = g.edge_count();
    if (h.vertex_count() != n + m) return false;
    if (h.edge_count() != expected_total_edge_count(g)) return false;
    return h.edge_count() <= m * (n + 1);
}

enum class CliqueClass { PureVertex, PureEdge, MixedTriangle, MixedStar };

inline const char* to_string(CliqueClass c) {
    switch (c) {
        case CliqueClass::PureVertex: return "pure-vertex";
        case CliqueClass::PureEdge: return "pure-edge";
        case CliqueClass::MixedTriangle: return "mixed-triangle";
        case CliqueClass::MixedStar: return "mixed-star";
    }
    return "?";
}

// Sorts a maximal clique of a labelled total graph into the four shapes a
// maximal clique can take there. Mixed cliques with two vertex-vertices can
// only be triangles; mixed cliques with one vertex-vertex are stars of its
// incident edges.
inline CliqueClass classify_maximal_clique(const Graph& h, const PartitionLabeling& lab,
                                           const VertexSet& clique) {
    if (lab.kinds.size() != static_cast<size_t>(h.vertex_count()))
        throw std::invalid_argument("classify_maximal_clique: labeling size mismatch");
    if (!is_vertex_set(h, clique) || clique.empty())
        throw std::invalid_argument("classify_maximal_clique: invalid clique set");
    if (!is_maximal_clique(h, clique))
        throw std::invalid_argument("classify_maximal_clique: clique is not maximal");
    int vv = 0;
    for (int v : clique)
        if (lab.kinds[v] == VertexKind::VertexVertex) ++vv;
    const int size = static_cast<int>(clique.size());
    if (vv == size) return CliqueClass::PureVertex;
    if (vv == 0) return CliqueClass::PureEdge;
    if (vv == 1) return CliqueClass::MixedStar;
    if (vv == 2 && size == 3) return CliqueClass::MixedTriangle;
    throw std::domain_error("classify_maximal_clique: labeling admits no total-graph shape");
}

} // namespace totalgraph
