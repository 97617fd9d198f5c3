#include <algorithm>

#include "doctest.h"

#include "lcw/canonical.hpp"
#include "lcw/graph.hpp"
#include "lcw/modular.hpp"
#include "lcw/qt.hpp"

using namespace lcw;

TEST_SUITE_BEGIN("modular");

TEST_CASE("module definition on hand examples") {
    Graph p4 = path_graph(4);
    CHECK(is_module(p4, 0));  // empty set
    CHECK(is_module(p4, p4.vertices()));
    for (int v = 0; v < 4; ++v) CHECK(is_module(p4, bit(v)));
    CHECK_FALSE(is_module(p4, vector_to_set({0, 1})));
    CHECK_FALSE(is_module(p4, vector_to_set({1, 2})));
    CHECK(is_module(cycle_graph(4), vector_to_set({0, 2})));
    CHECK_THROWS_AS(is_module(path_graph(2), vector_to_set({0, 2})), std::invalid_argument);
}

TEST_CASE("brute module enumeration counts") {
    // nonempty modules only. P_4 admits just the forced ones; P_3 adds the
    // endpoint pair; in K_3 every subset works
    CHECK(all_modules_brute(path_graph(4)).size() == 5);
    CHECK(all_modules_brute(path_graph(3)).size() == 5);
    CHECK(all_modules_brute(complete_graph(3)).size() == 7);
    auto p3 = all_modules_brute(path_graph(3));
    CHECK(std::find(p3.begin(), p3.end(), vector_to_set({0, 2})) != p3.end());
}

TEST_CASE("closure absorbs splitters") {
    Graph p4 = path_graph(4);
    CHECK(module_closure(p4, vector_to_set({0, 1})) == p4.vertices());
    CHECK(module_closure(p4, bit(2)) == bit(2));
    CHECK(module_closure(cycle_graph(4), vector_to_set({0, 2})) == vector_to_set({0, 2}));
}

TEST_CASE("maximal proper strong modules when graph and complement connect") {
    auto p4 = maximal_proper_strong_modules(path_graph(4));
    REQUIRE(p4.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(p4[static_cast<size_t>(v)] == bit(v));

    // a four-path whose last vertex is doubled into a non-edge: one real module
    Graph g = inflate(path_graph(4), {complete_graph(1), complete_graph(1), complete_graph(1),
                                      empty_graph(2)}).graph;
    REQUIRE(is_connected(g));
    REQUIRE(is_connected(complement(g)));
    auto parts = maximal_proper_strong_modules(g);
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == bit(0));
    CHECK(parts[1] == bit(1));
    CHECK(parts[2] == bit(2));
    CHECK(parts[3] == vector_to_set({3, 4}));
}

TEST_CASE("primality") {
    CHECK(is_prime(path_graph(2)));  // convention for two vertices
    CHECK(is_prime(empty_graph(2)));
    CHECK_FALSE(is_prime(path_graph(3)));
    CHECK(is_prime(path_graph(4)));
    CHECK_FALSE(is_prime(cycle_graph(4)));
    CHECK(is_prime(cycle_graph(5)));
    CHECK(is_prime(from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {2, 4}})));  // bull
    CHECK_THROWS_AS(is_prime(complete_graph(1)), std::invalid_argument);
    CHECK_THROWS_AS(is_prime_brute(complete_graph(1)), std::invalid_argument);
}

TEST_CASE("the four-path is the only prime on four vertices, none on three") {
    int primes3 = 0, primes4 = 0;
    for (const Graph& g : graphs_up_to_iso(3)) primes3 += is_prime(g);
    for (const Graph& g : graphs_up_to_iso(4)) {
        if (!is_prime(g)) continue;
        ++primes4;
        CHECK(canonical_graph6(g) == canonical_graph6(path_graph(4)));
    }
    CHECK(primes3 == 0);
    CHECK(primes4 == 1);
}

TEST_CASE("both primality checks agree through six vertices") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : graphs_up_to_iso(n)) {
            CAPTURE(to_graph6(g));
            CHECK(is_prime(g) == is_prime_brute(g));
        }
}

TEST_CASE("one decomposition stage of the seven-vertex universal host") {
    SkeletonDecomposition d = decompose_one_stage(gen_Q(3));
    CHECK(d.kind == SkeletonKind::AntiComplete);
    REQUIRE(d.modules.size() == 3);
    CHECK(popcount(d.modules[0]) == 4);
    CHECK(popcount(d.modules[1]) == 2);
    CHECK(popcount(d.modules[2]) == 1);
    CHECK(d.skeleton == empty_graph(3));
}

TEST_CASE("decomposition kinds on standard shapes") {
    SkeletonDecomposition c4 = decompose_one_stage(cycle_graph(4));
    CHECK(c4.kind == SkeletonKind::Complete);
    CHECK(c4.skeleton == complete_graph(2));
    CHECK(c4.modules == co_components(cycle_graph(4)));

    SkeletonDecomposition p4 = decompose_one_stage(path_graph(4));
    CHECK(p4.kind == SkeletonKind::Prime);
    CHECK(p4.modules.size() == 4);
    CHECK(canonical_graph6(p4.skeleton) == canonical_graph6(path_graph(4)));

    CHECK_THROWS_AS(decompose_one_stage(complete_graph(1)), std::invalid_argument);
}

TEST_CASE("decomposition blocks rebuild the graph") {
    for (const Graph& g : {gen_Q(3), cycle_graph(6), complement(gen_Q(3)),
                           disjoint_union(path_graph(4), complete_graph(3))}) {
        SkeletonDecomposition d = decompose_one_stage(g);
        std::vector<Graph> parts;
        std::vector<int> pi;
        for (VertexSet m : d.modules) {
            parts.push_back(induced_subgraph(g, m));
            for (int v : set_to_vector(m)) pi.push_back(v);
        }
        Graph recon = inflate(d.skeleton, parts).graph;
        for (int i = 0; i < g.n(); ++i)
            for (int j = i + 1; j < g.n(); ++j)
                CHECK(recon.adj(i, j) == g.adj(pi[static_cast<size_t>(i)],
                                               pi[static_cast<size_t>(j)]));
    }
}

TEST_CASE("json shape of a decomposition") {
    nlohmann::json j = to_json(decompose_one_stage(gen_Q(3)));
    CHECK(j["kind"] == "AntiComplete");
    CHECK(j["skeleton"] == to_graph6(empty_graph(3)));
    CHECK(j["modules"] == nlohmann::json({{0, 1, 2, 3}, {4, 5}, {6}}));
}

TEST_SUITE_END();
