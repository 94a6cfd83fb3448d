#include <catch2/catch_amalgamated.hpp>

#include "totalgraph/cliques.hpp"
#include "totalgraph/constructors.hpp"

using namespace totalgraph;

TEST_CASE("fixed-size clique lookup returns the lexicographically least hit", "[cliques]") {
    Graph k5 = complete_graph(5);
    for (int k = 1; k <= 5; ++k) {
        auto c = find_clique_of_size(k5, k);
        REQUIRE(c.has_value());
        VertexSet expect;
        for (int v = 0; v < k; ++v) expect.push_back(v);
        CHECK(*c == expect);
    }
    CHECK_FALSE(find_clique_of_size(k5, 6).has_value());
    CHECK_FALSE(find_clique_of_size(cycle_graph(5), 3).has_value());
    CHECK(find_clique_of_size(cycle_graph(5), 2) == VertexSet{0, 1});

    // two triangles; {1,2,3} is not one, so the least 3-clique is {0,1,2}
    Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(find_clique_of_size(g, 3) == VertexSet{0, 1, 2});
}

TEST_CASE("greedy extension reaches a maximal clique", "[cliques]") {
    Graph k4 = complete_graph(4);
    CHECK(greedy_extend_clique(k4, {0}) == VertexSet{0, 1, 2, 3});
    CHECK(greedy_extend_clique(k4, {2, 3}) == VertexSet{0, 1, 2, 3});

    // paw: extending the pendant edge stops at itself
    Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(greedy_extend_clique(paw, {2, 3}) == VertexSet{2, 3});
    CHECK(greedy_extend_clique(paw, {1}) == VertexSet{0, 1, 2});

    CHECK_THROWS_AS(greedy_extend_clique(paw, {}), std::invalid_argument);
    CHECK_THROWS_AS(greedy_extend_clique(paw, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(greedy_extend_clique(paw, {3, 0}), std::invalid_argument);
}

TEST_CASE("maximality test", "[cliques]") {
    Graph k4 = complete_graph(4);
    CHECK(is_maximal_clique(k4, {0, 1, 2, 3}));
    CHECK_FALSE(is_maximal_clique(k4, {0, 1, 2}));
    CHECK_FALSE(is_maximal_clique(k4, {}));
    Graph path = path_graph(3);
    CHECK(is_maximal_clique(path, {0, 1}));
    CHECK_FALSE(is_maximal_clique(path, {0, 2}));
}

TEST_CASE("maximal clique enumeration is complete and sorted", "[cliques]") {
    CHECK(maximal_cliques(complete_graph(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
    CHECK(maximal_cliques(cycle_graph(5)) ==
          std::vector<VertexSet>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    // bull: one triangle and two pendant edges
    Graph bull(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    CHECK(maximal_cliques(bull) == std::vector<VertexSet>{{0, 1, 2}, {0, 3}, {1, 4}});
    CHECK(maximal_cliques(Graph(1, {})) == std::vector<VertexSet>{{0}});
}

TEST_CASE("the total graph of K4 has fifteen maximal cliques", "[cliques]") {
    Graph t = total_of_complete(4).graph;
    auto cliques = maximal_cliques(t);
    REQUIRE(cliques.size() == 15);
    int size3 = 0, size4 = 0;
    for (const auto& c : cliques) {
        if (c.size() == 3) ++size3;
        if (c.size() == 4) ++size4;
    }
    CHECK(size3 == 10);
    CHECK(size4 == 5);
}

TEST_CASE("maximal cliques through a seed", "[cliques]") {
    // diamond: both triangles contain the shared edge {1,2}
    Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(maximal_cliques_containing(diamond, {1, 2}) ==
          std::vector<VertexSet>{{0, 1, 2}, {1, 2, 3}});
    CHECK(maximal_cliques_containing(diamond, {0}) == std::vector<VertexSet>{{0, 1, 2}});
    CHECK_THROWS_AS(maximal_cliques_containing(diamond, {0, 3}), std::invalid_argument);

    // in T(K4) a 4-clique lies in exactly one maximal clique
    Graph t = total_of_complete(4).graph;
    auto seed = find_clique_of_size(t, 4);
    REQUIRE(seed.has_value());
    auto through = maximal_cliques_containing(t, *seed);
    REQUIRE(through.size() == 1);
    CHECK(through[0].size() == 4);
}
