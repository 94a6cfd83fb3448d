#include <catch2/catch_amalgamated.hpp>

#include "totalgraph/analysis.hpp"
#include "totalgraph/constructors.hpp"
#include "totalgraph/isomorphism.hpp"
#include "totalgraph/oracle.hpp"

using namespace totalgraph;

TEST_CASE("basic families and their validation", "[constructors]") {
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(circulant_graph(10, {1, 2}).edge_count() == 20);
    CHECK(circulant_graph(6, {1}) == cycle_graph(6));

    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(circulant_graph(5, {0}), std::invalid_argument);
    CHECK_THROWS_AS(circulant_graph(5, {5}), std::invalid_argument);
}

TEST_CASE("line graph small identities", "[constructors]") {
    CHECK(line_graph(path_graph(4)).graph == path_graph(3));
    CHECK(are_isomorphic(line_graph(cycle_graph(5)).graph, cycle_graph(5)));
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(are_isomorphic(line_graph(star).graph, complete_graph(3)));
    CHECK(line_graph(complete_graph(3)).graph == complete_graph(3));
    CHECK_THROWS_AS(line_graph(Graph(2, {})), std::domain_error);

    LineGraphResult lg = line_graph(path_graph(3));
    CHECK(lg.source_edges == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("total graph layout and the worked instance", "[constructors]") {
    TotalGraphLayout t = total_graph(path_graph(4));
    CHECK(t.graph.vertex_count() == 7);
    CHECK(t.graph.edge_count() == 11);
    CHECK(t.vertex_part == VertexSet{0, 1, 2, 3});
    CHECK(t.edge_part == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(t.graph.edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {1, 4}, {1, 5},
                                               {2, 3}, {2, 5}, {2, 6}, {3, 6}, {4, 5}, {5, 6}});

    // K4 minus an edge: 4+5 vertices and 23 edges
    Graph k4e(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    TotalGraphLayout tk4e = total_graph(k4e);
    CHECK(tk4e.graph.vertex_count() == 9);
    CHECK(tk4e.graph.edge_count() == 23);
    CHECK(expected_total_edge_count(k4e) == 23);

    CHECK(are_isomorphic(total_graph(complete_graph(2)).graph, complete_graph(3)));
}

TEST_CASE("edge count formula matches two equivalent forms and the bound", "[constructors]") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected_graphs(n).graphs) {
            CAPTURE(n, g.edges());
            TotalGraphLayout t = total_graph(g);
            long long m = g.edge_count();
            REQUIRE(t.graph.vertex_count() == g.vertex_count() + m);
            REQUIRE(t.graph.edge_count() == expected_total_edge_count(g));
            // same count through the degree-square form
            long long dsq = 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                dsq += static_cast<long long>(g.degree(v)) * g.degree(v);
            REQUIRE(t.graph.edge_count() == 2 * m + dsq / 2);
            REQUIRE(t.graph.edge_count() <= m * (g.vertex_count() + 1));
        }
    }
}

TEST_CASE("vertex and edge part degrees follow the source degrees", "[constructors]") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected_graphs(n).graphs) {
            TotalGraphLayout t = total_graph(g);
            for (int v = 0; v < g.vertex_count(); ++v)
                REQUIRE(t.graph.degree(v) == 2 * g.degree(v));
            for (size_t i = 0; i < t.edge_part.size(); ++i) {
                auto [u, v] = t.edge_part[i];
                REQUIRE(t.graph.degree(g.vertex_count() + static_cast<int>(i)) ==
                        g.degree(u) + g.degree(v));
            }
            REQUIRE(is_regular(t.graph) == is_regular(g));
        }
    }
}

TEST_CASE("complete-graph total via groups matches the generic construction", "[constructors]") {
    TotalGraphLayout one = total_of_complete(1);
    CHECK(one.graph.vertex_count() == 1);
    CHECK(one.graph.edge_count() == 0);

    CHECK(are_isomorphic(total_of_complete(2).graph, complete_graph(3)));

    TotalGraphLayout three = total_of_complete(3);
    CHECK(three.graph.vertex_count() == 6);
    CHECK(three.graph.edge_count() == 12);
    CHECK(are_isomorphic(three.graph, total_graph(complete_graph(3)).graph));

    TotalGraphLayout four = total_of_complete(4);
    CHECK(four.graph.vertex_count() == 10);
    CHECK(four.graph.edge_count() == 30);
    CHECK(are_isomorphic(four.graph, total_graph(complete_graph(4)).graph));
    CHECK(four.vertex_part == VertexSet{0, 1, 2, 3});
    CHECK(four.edge_part ==
          std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

    // gluing never cancels an edge: count stays n(n-1)(n+1)/2
    for (long long n = 1; n <= 8; ++n) {
        TotalGraphLayout t = total_of_complete(static_cast<int>(n));
        REQUIRE(t.graph.vertex_count() == n * (n + 1) / 2);
        REQUIRE(t.graph.edge_count() == n * (n - 1) * (n + 1) / 2);
        for (int v = 0; v < t.graph.vertex_count(); ++v)
            REQUIRE(t.graph.degree(v) == 2 * (n - 1));
    }
}

TEST_CASE("the total of a complete graph is the line graph of the next", "[constructors]") {
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(are_isomorphic(total_of_complete(n).graph,
                             line_graph(complete_graph(n + 1)).graph));
    }
}

TEST_CASE("cycle and path totals match the generic construction", "[constructors]") {
    for (int n = 3; n <= 8; ++n) {
        CAPTURE(n);
        TotalGraphLayout t = total_of_cycle(n);
        CHECK(t.graph.vertex_count() == 2 * n);
        CHECK(t.graph.edge_count() == 4 * n);
        CHECK(are_isomorphic(t.graph, total_graph(cycle_graph(n)).graph));
        CHECK(are_isomorphic(t.graph, circulant_graph(2 * n, {1, 2})));
        // the octahedron (n = 3) carries two extra long triangles
        CHECK(triangle_count(t.graph) == (n == 3 ? 8 : 2 * n));
    }
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        TotalGraphLayout t = total_of_path(n);
        CHECK(t.graph.vertex_count() == 2 * n - 1);
        CHECK(t.graph.edge_count() == 4 * n - 5);
        CHECK(are_isomorphic(t.graph, total_graph(path_graph(n)).graph));
    }
    CHECK(are_isomorphic(total_of_cycle(3).graph, total_of_complete(3).graph));
    CHECK_THROWS_AS(total_of_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(total_of_path(1), std::invalid_argument);
}

TEST_CASE("cycle structure check accepts the real thing and explains refusals",
          "[constructors]") {
    StructureCheck ok = check_total_of_cycle(total_graph(cycle_graph(6)).graph, 6);
    REQUIRE(ok.certificate.has_value());
    CHECK(ok.certificate->cyclic);
    CHECK(ok.certificate->first_sequence.size() == 6);
    CHECK(ok.certificate->second_sequence.size() == 6);
    CHECK(ok.certificate->interleaved_sequence.size() == 12);
    CHECK(certificate_is_valid(total_graph(cycle_graph(6)).graph, *ok.certificate));

    StructureCheck small = check_total_of_cycle(complete_graph(3), 2);
    CHECK(small.refusal == "refused: cycle order below minimum");
    StructureCheck counts = check_total_of_cycle(complete_graph(3), 3);
    CHECK(counts.refusal == "refused: vertex count 3 differs from 6");
    StructureCheck edges = check_total_of_cycle(Graph(6, {{0, 1}}), 3);
    CHECK(edges.refusal == "refused: edge count 1 differs from 12");

    // C10(1,3) has the counts and regularity of a cycle total but no triangles
    Graph impostor = circulant_graph(10, {1, 3});
    CHECK(triangle_count(impostor) == 0);
    StructureCheck shape = check_total_of_cycle(impostor, 5);
    CHECK(shape.refusal == "refused: not isomorphic to the cycle total graph on 5 vertices");
}

TEST_CASE("path structure check and certificate validation", "[constructors]") {
    Graph h = total_graph(path_graph(5)).graph;
    StructureCheck ok = check_total_of_path(h, 5);
    REQUIRE(ok.certificate.has_value());
    CHECK_FALSE(ok.certificate->cyclic);
    CHECK(ok.certificate->first_sequence.size() == 5);
    CHECK(ok.certificate->second_sequence.size() == 4);
    CHECK(certificate_is_valid(h, *ok.certificate));

    // tampering breaks validation
    StructureCertificate bent = *ok.certificate;
    std::swap(bent.first_sequence[0], bent.first_sequence[1]);
    CHECK_FALSE(certificate_is_valid(h, bent));
    StructureCertificate truncated = *ok.certificate;
    truncated.interleaved_sequence.pop_back();
    CHECK_FALSE(certificate_is_valid(h, truncated));

    CHECK(check_total_of_path(h, 4).refusal == "refused: vertex count 9 differs from 7");
    CHECK(check_total_of_path(complete_graph(3), 1).refusal ==
          "refused: path order below minimum");
    // the path total on 2 vertices is the triangle
    StructureCheck tiny = check_total_of_path(complete_graph(3), 2);
    REQUIRE(tiny.certificate.has_value());
    CHECK(certificate_is_valid(complete_graph(3), *tiny.certificate));
}
