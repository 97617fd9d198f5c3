#include <sstream>

#include "doctest.h"

#include "lcw/canonical.hpp"
#include "lcw/graph.hpp"

using namespace lcw;

TEST_SUITE_BEGIN("graph");

TEST_CASE("vertex set helpers") {
    CHECK(popcount(0b1011) == 3);
    CHECK(lowest_vertex(0b1000) == 3);
    CHECK(set_to_vector(0b1011) == std::vector<int>{0, 1, 3});
    CHECK(vector_to_set({0, 1, 3}) == VertexSet{0b1011});
    int sum = 0;
    for_each_vertex(0b10101, [&](int v) { sum += v; });
    CHECK(sum == 0 + 2 + 4);
}

TEST_CASE("basic construction and adjacency") {
    Graph g(4);
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 2);
    CHECK(g.adj(0, 2));
    CHECK(g.adj(2, 0));
    CHECK_FALSE(g.adj(0, 1));
    CHECK(g.degree(0) == 1);
    CHECK(g.neighbors(0) == bit(2));
    CHECK(g.vertices() == 0b1111);

    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
}

TEST_CASE("named families") {
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(empty_graph(5).edge_count() == 0);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(cycle_graph(4).edge_count() == 4);
    Graph p4 = path_graph(4);
    CHECK(p4.adj(0, 1));
    CHECK(p4.adj(1, 2));
    CHECK(p4.adj(2, 3));
    CHECK_FALSE(p4.adj(0, 2));
}

TEST_CASE("complement of the four-path") {
    Graph c = complement(path_graph(4));
    CHECK(c.edge_count() == 3);
    CHECK(c.adj(0, 2));
    CHECK(c.adj(0, 3));
    CHECK(c.adj(1, 3));
    CHECK_FALSE(c.adj(0, 1));
    // self-complementary as an unlabeled graph
    CHECK(canonical_graph6(c) == canonical_graph6(path_graph(4)));
}

TEST_CASE("join of a vertex with two isolated vertices is the three-path") {
    Graph g = join(complete_graph(1), empty_graph(2));
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adj(0, 1));
    CHECK(g.adj(0, 2));
    CHECK_FALSE(g.adj(1, 2));
    CHECK(canonical_graph6(g) == canonical_graph6(path_graph(3)));
}

TEST_CASE("disjoint union keeps both sides intact") {
    Graph g = disjoint_union(complete_graph(2), path_graph(3));
    CHECK(g.n() == 5);
    CHECK(g.edge_count() == 3);
    CHECK(g.adj(0, 1));
    CHECK(g.adj(2, 3));
    CHECK(g.adj(3, 4));
    CHECK_FALSE(g.adj(1, 2));
}

TEST_CASE("components and co-components") {
    Graph g = disjoint_union(complete_graph(2), disjoint_union(complete_graph(1), path_graph(2)));
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == vector_to_set({0, 1}));
    CHECK(comps[1] == vector_to_set({2}));
    CHECK(comps[2] == vector_to_set({3, 4}));

    auto cocs = co_components(path_graph(3));
    REQUIRE(cocs.size() == 2);
    CHECK(cocs[0] == vector_to_set({0, 2}));
    CHECK(cocs[1] == vector_to_set({1}));

    CHECK(is_connected(path_graph(5)));
    CHECK_FALSE(is_connected(disjoint_union(complete_graph(1), complete_graph(1))));
    CHECK(is_connected(complete_graph(1)));
}

TEST_CASE("induced subgraph renumbers in order") {
    Graph h = induced_subgraph(path_graph(4), vector_to_set({0, 1, 3}));
    CHECK(h.n() == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.adj(0, 1));
    CHECK_FALSE(h.adj(1, 2));
    CHECK_FALSE(h.adj(0, 2));
}

TEST_CASE("inflation lays blocks out contiguously") {
    Inflation inf = inflate(path_graph(2), {empty_graph(2), complete_graph(1)});
    const Graph& g = inf.graph;
    CHECK(g.n() == 3);
    CHECK(inf.block_of == std::vector<int>{0, 0, 1});
    CHECK(g.adj(0, 2));
    CHECK(g.adj(1, 2));
    CHECK_FALSE(g.adj(0, 1));

    // inflating with singletons reproduces the skeleton
    Inflation same = inflate(cycle_graph(5), std::vector<Graph>(5, complete_graph(1)));
    CHECK(same.graph == cycle_graph(5));
}

TEST_CASE("from_edges validates") {
    Graph g = from_edges(3, {{0, 1}, {1, 2}});
    CHECK(g == path_graph(3));
    CHECK_THROWS_AS(from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edges(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("graph6 encodes the column-major upper triangle") {
    CHECK(to_graph6(complete_graph(1)) == "@");
    CHECK(to_graph6(empty_graph(4)) == "C?");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(path_graph(4)) == "Ch");
    CHECK(to_graph6(cycle_graph(4)) == "Cl");
    CHECK(from_graph6("Ch") == path_graph(4));
}

TEST_CASE("graph6 round trip across whole levels") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : graphs_up_to_iso(n)) CHECK(from_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 rejects malformed strings") {
    CHECK_THROWS_AS(from_graph6(""), InputError);
    CHECK_THROWS_AS(from_graph6("not-a-graph"), InputError);
    CHECK_THROWS_AS(from_graph6("C"), InputError);        // missing edge bits
    CHECK_THROWS_AS(from_graph6("Chh"), InputError);      // trailing garbage
}

TEST_CASE("edge list round trip") {
    Graph g = cycle_graph(5);
    std::istringstream in(to_edge_list(g));
    CHECK(parse_edge_list(in) == g);

    std::istringstream bad1("3\n0 0\n");
    CHECK_THROWS_AS(parse_edge_list(bad1), InputError);
    std::istringstream bad2("3\n0 5\n");
    CHECK_THROWS_AS(parse_edge_list(bad2), InputError);
    std::istringstream bad3("");
    CHECK_THROWS_AS(parse_edge_list(bad3), InputError);
    std::istringstream bad4("3\n0\n");
    CHECK_THROWS_AS(parse_edge_list(bad4), InputError);
}

TEST_SUITE_END();
