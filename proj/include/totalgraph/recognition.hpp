// Total-graph recognition: the complete-graph recogniser, the peeling
// search that strips one source vertex per round, and full certificate
// verification. A graph is accepted only after its reconstructed source
// rebuilds an isomorphic copy of the input.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "totalgraph/analysis.hpp"
#include "totalgraph/cliques.hpp"
#include "totalgraph/constructors.hpp"
#include "totalgraph/graph.hpp"
#include "totalgraph/io.hpp"
#include "totalgraph/isomorphism.hpp"

namespace totalgraph {

struct PartitionVerification {
    std::optional<Graph> inverse; // source graph when the labelling holds
    std::string refusal;          // first violated condition otherwise
};

// Checks every adjacency rule a total-graph labelling implies, in both
// directions: endpoints are adjacent vertex-vertices, every edge-vertex
// touches exactly its two endpoints among vertex-vertices, adjacent
// vertex-vertex pairs are covered by exactly one edge-vertex, and
// edge-vertices meet exactly when their endpoint pairs intersect.
inline PartitionVerification verify_partition(const Graph& h, const PartitionLabeling& lab) {
    const int n = h.vertex_count();
    if (lab.kinds.size() != static_cast<size_t>(n) || lab.endpoints.size() != lab.kinds.size())
        return {std::nullopt, "refused: labeling size mismatch"};
    std::vector<int> rank(n, -1);
    int nv = 0;
    for (int v = 0; v < n; ++v)
        if (lab.kinds[v] == VertexKind::VertexVertex) rank[v] = nv++;
    if (nv == 0) return {std::nullopt, "refused: labeling has no vertex-vertices"};

    std::vector<int> edge_vertices;
    std::vector<std::pair<Edge, int>> owners; // (endpoint pair, edge-vertex)
    for (int v = 0; v < n; ++v) {
        if (lab.kinds[v] != VertexKind::EdgeVertex) continue;
        edge_vertices.push_back(v);
        const auto [a, b] = lab.endpoints[v];
        const std::string who = "edge-vertex " + std::to_string(v);
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            return {std::nullopt, "refused: " + who + " has invalid endpoints"};
        if (lab.kinds[a] != VertexKind::VertexVertex || lab.kinds[b] != VertexKind::VertexVertex)
            return {std::nullopt, "refused: " + who + " endpoints are not vertex-vertices"};
        if (!h.adjacent(v, a) || !h.adjacent(v, b))
            return {std::nullopt, "refused: " + who + " is not adjacent to its endpoints"};
        if (!h.adjacent(a, b))
            return {std::nullopt, "refused: " + who + " endpoints are not adjacent"};
        int seen = 0;
        for (int w : h.neighbors(v))
            if (lab.kinds[w] == VertexKind::VertexVertex) ++seen;
        if (seen != 2)
            return {std::nullopt, "refused: " + who + " has " + std::to_string(seen) +
                                      " vertex-vertex neighbours instead of 2"};
        owners.push_back({make_edge(a, b), v});
    }
    std::sort(owners.begin(), owners.end());
    for (size_t i = 1; i < owners.size(); ++i)
        if (owners[i].first == owners[i - 1].first)
            return {std::nullopt, "refused: endpoint pair (" +
                                      std::to_string(owners[i].first.first) + "," +
                                      std::to_string(owners[i].first.second) +
                                      ") is covered by two edge-vertices"};
    for (const auto& [u, w] : h.edges()) {
        if (lab.kinds[u] != VertexKind::VertexVertex || lab.kinds[w] != VertexKind::VertexVertex)
            continue;
        Edge key = make_edge(u, w);
        auto it = std::lower_bound(owners.begin(), owners.end(),
                                   std::make_pair(key, -1));
        if (it == owners.end() || it->first != key)
            return {std::nullopt, "refused: adjacent vertex-vertices (" + std::to_string(u) +
                                      "," + std::to_string(w) + ") have no covering edge-vertex"};
    }
    for (size_t i = 0; i < edge_vertices.size(); ++i)
        for (size_t j = i + 1; j < edge_vertices.size(); ++j) {
            const int x = edge_vertices[i], y = edge_vertices[j];
            const auto [a, b] = lab.endpoints[x];
            const auto [c, d] = lab.endpoints[y];
            const bool meet = (a == c || a == d || b == c || b == d);
            if (meet != h.adjacent(x, y))
                return {std::nullopt, "refused: edge-vertices " + std::to_string(x) + " and " +
                                          std::to_string(y) +
                                          (meet ? " share an endpoint but are not adjacent"
                                                : " are adjacent but share no endpoint")};
        }

    std::vector<Edge> source_edges;
    source_edges.reserve(owners.size());
    for (const auto& [pair, v] : owners)
        source_edges.push_back(make_edge(rank[pair.first], rank[pair.second]));
    return {Graph(nv, source_edges), ""};
}

namespace detail {

// Labels clique q as the vertex part and everything else as edge-vertices
// whose endpoints are their neighbours inside q; accepts only if the full
// certificate holds and reconstructs a complete source graph.
inline std::optional<PartitionLabeling> try_complete_vertex_part(const Graph& h,
                                                                 const VertexSet& q) {
    PartitionLabeling lab;
    lab.kinds.assign(h.vertex_count(), VertexKind::EdgeVertex);
    lab.endpoints.assign(h.vertex_count(), {-1, -1});
    std::vector<char> in_q(h.vertex_count(), 0);
    for (int v : q) {
        lab.kinds[v] = VertexKind::VertexVertex;
        in_q[v] = 1;
    }
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (in_q[v]) continue;
        int a = -1, b = -1;
        for (int w : h.neighbors(v)) {
            if (!in_q[w]) continue;
            if (a < 0)
                a = w;
            else if (b < 0)
                b = w;
            else
                return std::nullopt;
        }
        if (b < 0) return std::nullopt;
        lab.endpoints[v] = make_edge(a, b);
    }
    auto check = verify_partition(h, lab);
    if (!check.inverse) return std::nullopt;
    const long long nv = check.inverse->vertex_count();
    if (check.inverse->edge_count() != nv * (nv - 1) / 2) return std::nullopt;
    return lab;
}

// Solves n(n+1)/2 = |V(h)| and screens the edge count and regularity.
inline int complete_total_order(const Graph& h) {
    const long long v = h.vertex_count();
    long long n = -1;
    for (long long c = 1; c * (c + 1) / 2 <= v; ++c)
        if (c * (c + 1) / 2 == v) {
            n = c;
            break;
        }
    if (n < 0) return -1;
    if (h.edge_count() != n * (n - 1) * (n + 1) / 2) return -1;
    for (int u = 0; u < h.vertex_count(); ++u)
        if (h.degree(u) != 2 * (n - 1)) return -1;
    return static_cast<int>(n);
}

inline void enumerate_cliques_of_size(const Graph& g, int k,
                                      const std::function<bool(const VertexSet&)>& emit) {
    std::vector<int> clique;
    auto extend = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(clique.size()) == k) return emit(clique);
        for (int v = from; v < g.vertex_count(); ++v) {
            bool ok = true;
            for (int c : clique)
                if (!g.adjacent(c, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            clique.push_back(v);
            bool go_on = self(self, v + 1);
            clique.pop_back();
            if (!go_on) return false;
        }
        return true;
    };
    extend(extend, 0);
}

// Every labelling of h as the total graph of a complete graph, in the
// ascending order of candidate vertex-part cliques. emit returns false to
// stop. Used by the inverse search, where surrounding constraints may rule
// out some of the (mutually isomorphic) labellings.
inline void complete_total_labelings(
    const Graph& h, const std::function<bool(int, const PartitionLabeling&)>& emit) {
    const int n = complete_total_order(h);
    if (n < 0) return;
    if (n == 1) {
        PartitionLabeling lab;
        lab.kinds.assign(1, VertexKind::VertexVertex);
        lab.endpoints.assign(1, {-1, -1});
        emit(1, lab);
        return;
    }
    enumerate_cliques_of_size(h, n, [&](const VertexSet& q) {
        if (auto lab = try_complete_vertex_part(h, q)) return emit(n, *lab);
        return true;
    });
}

} // namespace detail

// Order n such that h is the total graph of the complete graph on n
// vertices, together with a certifying labelling. Counting and regularity
// screens come first; tiny orders fall back to direct isomorphism with the
// reference construction, larger ones grow a seed 4-clique into candidate
// vertex parts (every maximal clique through the seed is tried).
inline std::optional<std::pair<int, PartitionLabeling>> recognize_complete_total_labeled(
    const Graph& h) {
    const int n = detail::complete_total_order(h);
    if (n < 0) return std::nullopt;
    if (n == 1) {
        PartitionLabeling lab;
        lab.kinds.assign(1, VertexKind::VertexVertex);
        lab.endpoints.assign(1, {-1, -1});
        return std::make_pair(1, lab);
    }
    if (n <= 3) {
        TotalGraphLayout ref = total_of_complete(n);
        auto iso = find_isomorphism(ref.graph, h);
        if (!iso) return std::nullopt;
        PartitionLabeling ref_lab = labeling_of(ref);
        PartitionLabeling lab;
        lab.kinds.assign(h.vertex_count(), VertexKind::VertexVertex);
        lab.endpoints.assign(h.vertex_count(), {-1, -1});
        for (int v = 0; v < ref.graph.vertex_count(); ++v) {
            lab.kinds[(*iso)[v]] = ref_lab.kinds[v];
            if (ref_lab.kinds[v] == VertexKind::EdgeVertex) {
                const auto [a, b] = ref_lab.endpoints[v];
                lab.endpoints[(*iso)[v]] = make_edge((*iso)[a], (*iso)[b]);
            }
        }
        return std::make_pair(n, lab);
    }
    auto seed = find_clique_of_size(h, 4);
    if (!seed) return std::nullopt;
    for (const VertexSet& q : maximal_cliques_containing(h, *seed)) {
        if (static_cast<int>(q.size()) != n) continue;
        if (auto lab = detail::try_complete_vertex_part(h, q))
            return std::make_pair(n, *lab);
    }
    return std::nullopt;
}

inline std::optional<int> recognize_complete_total(const Graph& h) {
    if (auto r = recognize_complete_total_labeled(h)) return r->first;
    return std::nullopt;
}

struct RecognitionOptions {
    long long budget = 100000; // backtracking node allowance
    int profile_cap = 64;      // per-vertex cap on neighbourhood profiles
};

struct SearchStats {
    long long nodes = 0;
    long long backtracks = 0;
};

enum class RecognitionStatus { TotalGraph, NotTotalGraph, Inconclusive };

struct RecognitionOutcome {
    RecognitionStatus status = RecognitionStatus::NotTotalGraph;
    Graph inverse;              // source graph, when status is TotalGraph
    PartitionLabeling labeling; // certificate over the input graph
    std::string refusal_witness;
    SearchStats stats;
};

namespace detail {

struct InverseSearch {
    const Graph& h;
    RecognitionOptions opt;
    SearchStats stats{};
    PartitionLabeling lab;
    std::string first_refusal;
    bool truncated = false;
    bool out_of_budget = false;
    std::optional<Graph> found;

    explicit InverseSearch(const Graph& host, RecognitionOptions options)
        : h(host), opt(options) {
        lab.kinds.assign(h.vertex_count(), VertexKind::VertexVertex);
        lab.endpoints.assign(h.vertex_count(), {-1, -1});
    }

    void refuse(const std::string& msg) {
        if (first_refusal.empty()) first_refusal = msg;
    }

    bool charge_node() {
        if (++stats.nodes > opt.budget) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    // All vertices labelled: verify the certificate, then insist the
    // reconstructed source really rebuilds the input.
    bool finalize() {
        auto check = verify_partition(h, lab);
        if (!check.inverse) {
            refuse(check.refusal);
            return false;
        }
        TotalGraphLayout rebuilt = total_graph(*check.inverse);
        if (!are_isomorphic(rebuilt.graph, h)) {
            refuse("refused: reconstructed source does not rebuild the input graph");
            return false;
        }
        found = std::move(*check.inverse);
        return true;
    }

    bool solve(const std::vector<int>& active) {
        if (active.empty()) return finalize();
        InducedSubgraph whole = induced_subgraph(h, active);
        const auto comps = connected_components(whole.graph);
        VertexSet comp;
        for (int l : comps[0]) comp.push_back(whole.vertices[l]);
        VertexSet rest;
        std::set_difference(active.begin(), active.end(), comp.begin(), comp.end(),
                            std::back_inserter(rest));
        InducedSubgraph sub = induced_subgraph(h, comp);

        // Absorption: a residual component that is the total graph of a
        // complete graph ends its peeling. All certifying labellings are
        // tried, because outer rounds may pin some vertices as one kind.
        bool complete_candidate = false;
        bool solved = false;
        complete_total_labelings(sub.graph, [&](int, const PartitionLabeling& clab) {
            complete_candidate = true;
            if (!charge_node()) return false;
            apply_local(sub, clab);
            if (solve(rest)) {
                solved = true;
                return false;
            }
            ++stats.backtracks;
            return !out_of_budget;
        });
        if (solved) return true;
        if (complete_candidate || out_of_budget) return false;

        if (max_degree(sub.graph) <= 2) {
            refuse("refused: low-degree residual component is not the total graph of a "
                   "single vertex or single edge");
            return false;
        }
        return peel(sub, rest);
    }

    void apply_local(const InducedSubgraph& sub, const PartitionLabeling& clab) {
        for (int v = 0; v < sub.graph.vertex_count(); ++v) {
            const int host = sub.vertices[v];
            lab.kinds[host] = clab.kinds[v];
            if (clab.kinds[v] == VertexKind::EdgeVertex) {
                const auto [a, b] = clab.endpoints[v];
                lab.endpoints[host] = make_edge(sub.vertices[a], sub.vertices[b]);
            } else {
                lab.endpoints[host] = {-1, -1};
            }
        }
    }

    // One peeling round inside a residual component: pick a maximum-degree
    // vertex that reads as a vertex-vertex, commit one of its neighbourhood
    // profiles, and drop it together with its incident edge-vertices.
    bool peel(const InducedSubgraph& sub, const VertexSet& rest) {
        const Graph& g = sub.graph;
        const int delta = max_degree(g);
        std::vector<int> centers;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == delta) centers.push_back(v);

        std::vector<ProfileScan> scans(centers.size());
        bool any_profile = false;
        for (size_t i = 0; i < centers.size(); ++i) {
            scans[i] = vertex_vertex_profile_scan(g, centers[i], ProfileOptions{opt.profile_cap});
            truncated = truncated || scans[i].truncated;
            if (!scans[i].profiles.empty()) {
                any_profile = true;
                continue;
            }
            if (!edge_vertex_check(g, centers[i]).passes) {
                refuse("refused: maximum-degree vertex " + std::to_string(sub.vertices[centers[i]]) +
                       " conforms to neither neighbourhood characterisation");
                return false;
            }
        }
        if (!any_profile) {
            refuse("refused: no maximum-degree vertex admits a vertex-vertex profile");
            return false;
        }

        for (size_t i = 0; i < centers.size(); ++i) {
            const int host_center = sub.vertices[centers[i]];
            for (const NeighborhoodProfile& p : scans[i].profiles) {
                if (!charge_node()) return false;
                lab.kinds[host_center] = VertexKind::VertexVertex;
                lab.endpoints[host_center] = {-1, -1};
                VertexSet removed{host_center};
                for (const auto& [e_local, partner_local] : p.pairs) {
                    const int host_e = sub.vertices[e_local];
                    lab.kinds[host_e] = VertexKind::EdgeVertex;
                    lab.endpoints[host_e] =
                        make_edge(host_center, sub.vertices[partner_local]);
                    removed.push_back(host_e);
                }
                std::sort(removed.begin(), removed.end());
                VertexSet next;
                std::set_difference(sub.vertices.begin(), sub.vertices.end(), removed.begin(),
                                    removed.end(), std::back_inserter(next));
                VertexSet next_active;
                std::merge(next.begin(), next.end(), rest.begin(), rest.end(),
                           std::back_inserter(next_active));
                if (solve(next_active)) return true;
                ++stats.backtracks;
                if (out_of_budget) return false;
            }
        }
        return false;
    }
};

} // namespace detail

// Reconstructs the unique source graph whose total graph is h, searching
// over peeling decisions with backtracking. Success is certified; refusal
// reports the first unsatisfiable condition; running out of search budget
// (or past the profile cap) yields an explicitly inconclusive outcome.
inline RecognitionOutcome inverse_total(const Graph& h, const RecognitionOptions& opt = {}) {
    if (!is_connected(h)) throw std::domain_error("inverse_total: input graph is disconnected");
    detail::InverseSearch search(h, opt);
    std::vector<int> active(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) active[v] = v;
    RecognitionOutcome out;
    const bool ok = search.solve(active);
    out.stats = search.stats;
    if (ok) {
        out.status = RecognitionStatus::TotalGraph;
        out.inverse = std::move(*search.found);
        out.labeling = std::move(search.lab);
        return out;
    }
    if (search.out_of_budget) {
        out.status = RecognitionStatus::Inconclusive;
        out.refusal_witness =
            "search budget of " + std::to_string(opt.budget) + " nodes exhausted";
        return out;
    }
    if (search.truncated) {
        out.status = RecognitionStatus::Inconclusive;
        out.refusal_witness = "profile cap truncated the search space";
        return out;
    }
    out.status = RecognitionStatus::NotTotalGraph;
    out.refusal_witness = search.first_refusal.empty()
                              ? "refused: every labelling branch was exhausted"
                              : search.first_refusal;
    return out;
}

inline const char* to_string(RecognitionStatus s) {
    switch (s) {
        case RecognitionStatus::TotalGraph: return "total-graph";
        case RecognitionStatus::NotTotalGraph: return "not-total-graph";
        case RecognitionStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

// Stable text form: status line; for successes the source graph and the
// labelling block, for refusals a one-line witness.
inline void format_outcome(std::ostream& out, const Graph& h, const RecognitionOutcome& o) {
    out << to_string(o.status) << '\n';
    if (o.status == RecognitionStatus::TotalGraph) {
        format_graph(out, o.inverse);
        format_labeling(out, h, o.labeling);
    } else {
        out << "witness " << o.refusal_witness << '\n';
    }
}

} // namespace totalgraph
