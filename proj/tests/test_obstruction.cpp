#include "doctest.h"

#include "lcw/graph.hpp"
#include "lcw/obstruction.hpp"
#include "lcw/qt.hpp"

using namespace lcw;

TEST_SUITE_BEGIN("obstruction");

TEST_CASE("embedding validity checks both edge directions") {
    Graph p3 = path_graph(3);
    Graph p4 = path_graph(4);
    CHECK(embedding_valid(p3, p4, Embedding{{0, 1, 2}}));
    CHECK_FALSE(embedding_valid(p3, p4, Embedding{{0, 2, 1}}));   // adjacency broken
    CHECK_FALSE(embedding_valid(p3, p4, Embedding{{0, 1, 1}}));   // not injective
    CHECK_FALSE(embedding_valid(p3, p4, Embedding{{0, 1, 4}}));   // out of range
    CHECK_FALSE(embedding_valid(p3, p4, Embedding{{0, 1}}));      // wrong arity
    CHECK_FALSE(embedding_valid(p3, p4, Embedding{{0, 1, 3}}));   // 1-3 not an edge
}

TEST_CASE("induced embeddings found and refused correctly") {
    auto hit = induced_embed(path_graph(3), path_graph(4));
    REQUIRE(hit.has_value());
    CHECK(embedding_valid(path_graph(3), path_graph(4), *hit));

    CHECK_FALSE(induced_embed(complete_graph(3), cycle_graph(4)).has_value());
    CHECK_FALSE(induced_embed(cycle_graph(4), gen_Q(3)).has_value());
    CHECK_FALSE(induced_embed(path_graph(5), path_graph(4)).has_value());
    CHECK_FALSE(induced_embed(empty_graph(2), complete_graph(5)).has_value());

    // an induced four-path inside the six-cycle, but none inside the complement
    auto in_c6 = induced_embed(path_graph(4), cycle_graph(6));
    REQUIRE(in_c6.has_value());
    CHECK(embedding_valid(path_graph(4), cycle_graph(6), *in_c6));
}

TEST_CASE("every reported embedding is deterministic") {
    auto a = induced_embed(path_graph(4), cycle_graph(6));
    auto b = induced_embed(path_graph(4), cycle_graph(6));
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->map == b->map);
}

TEST_CASE("avoidance indices on standard graphs") {
    CHECK(qt_avoidance_index(complete_graph(1)) == 2);
    CHECK(coqt_avoidance_index(complete_graph(1)) == 2);
    CHECK(qt_avoidance_index(cycle_graph(4)) == 2);
    CHECK(coqt_avoidance_index(cycle_graph(4)) == 3);
    CHECK(qt_avoidance_index(path_graph(4)) == 3);
    CHECK(coqt_avoidance_index(path_graph(4)) == 3);
    CHECK(qt_avoidance_index(complete_graph(5)) == 2);
    CHECK(coqt_avoidance_index(complete_graph(5)) == 2);
    CHECK(qt_avoidance_index(empty_graph(5)) == 2);   // K_2 + K_1 needs an edge
    CHECK(coqt_avoidance_index(empty_graph(5)) == 2);
}

TEST_CASE("avoidance scan stops before oversized hosts") {
    // Q_5 fits in its own graph, Q_6 has 63 > 31 vertices: index 6 by size alone
    CHECK(qt_avoidance_index(gen_Q(5)) == 6);
    CHECK(coqt_avoidance_index(gen_coQ(5)) == 6);
}

TEST_CASE("obstructions report which family hit") {
    auto q = find_obstruction(gen_Q(3), 3, 3);
    REQUIRE(q.has_value());
    CHECK_FALSE(q->is_co);
    CHECK(q->index == 3);
    CHECK(embedding_valid(gen_Q(3), gen_Q(3), q->emb));

    auto co = find_obstruction(gen_coQ(3), 3, 3);
    REQUIRE(co.has_value());
    CHECK(co->is_co);
    CHECK(embedding_valid(gen_coQ(3), gen_coQ(3), co->emb));

    CHECK_FALSE(find_obstruction(path_graph(4), 3, 3).has_value());
}

TEST_CASE("embedding json names both graphs") {
    auto e = induced_embed(path_graph(3), path_graph(4));
    REQUIRE(e.has_value());
    nlohmann::json j = embedding_json(path_graph(3), path_graph(4), *e);
    CHECK(j["pattern"] == to_graph6(path_graph(3)));
    CHECK(j["host"] == to_graph6(path_graph(4)));
    CHECK(j["map"].size() == 3);
}

TEST_SUITE_END();
