// Seeded random graph generators for the self-test and the test suite.
// mt19937_64 output is pinned by the standard, and the integer-range
// reduction is done by rejection here, so every draw is reproducible
// across platforms and standard libraries.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "totalgraph/graph.hpp"

namespace totalgraph {

class DeterministicRng {
  public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform value in [0, n) by rejection, independent of the library's
    // distribution implementation.
    int below(int n) {
        if (n <= 0) throw std::invalid_argument("DeterministicRng::below: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return static_cast<int>(draw % span);
    }

  private:
    std::mt19937_64 engine_;
};

// Connected graph on n vertices with exactly m edges: a random spanning
// tree (each vertex attaches to a random earlier one) plus random extra
// edges drawn by rejection.
inline Graph random_connected_graph(DeterministicRng& rng, int n, long long m) {
    if (n <= 0) throw std::invalid_argument("random_connected_graph: vertex count must be positive");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges)
        throw std::invalid_argument("random_connected_graph: edge count out of range");
    std::vector<Edge> edges;
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    auto add = [&](int u, int v) {
        edges.push_back(make_edge(u, v));
        seen[u][v] = seen[v][u] = 1;
    };
    for (int v = 1; v < n; ++v) add(rng.below(v), v);
    while (static_cast<long long>(edges.size()) < m) {
        const int u = rng.below(n);
        const int v = rng.below(n);
        if (u == v || seen[u][v]) continue;
        add(u, v);
    }
    return Graph(n, edges);
}

// Connected d-regular graph via the configuration model: pair up degree
// stubs with a seeded shuffle and retry whenever the pairing produces a
// loop, a repeated edge, or a disconnected result.
inline Graph random_regular_connected_graph(DeterministicRng& rng, int n, int d) {
    if (n <= 0 || d <= 0) throw std::invalid_argument("random_regular_connected_graph: bad size");
    if ((static_cast<long long>(n) * d) % 2 != 0 || d >= n)
        throw std::invalid_argument("random_regular_connected_graph: no such regular graph");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rng.below(i + 1)]);
        std::vector<Edge> edges;
        std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            const int u = stubs[i], v = stubs[i + 1];
            if (u == v || seen[u][v]) {
                ok = false;
                break;
            }
            seen[u][v] = seen[v][u] = 1;
            edges.push_back(make_edge(u, v));
        }
        if (!ok) continue;
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_regular_connected_graph: pairing kept failing");
}

} // namespace totalgraph
