#include <set>

#include "doctest.h"

#include "lcw/canonical.hpp"
#include "lcw/graph.hpp"

using namespace lcw;

TEST_SUITE_BEGIN("canonical");

TEST_CASE("apply_permutation relabels adjacency") {
    Graph p3 = path_graph(3);
    Graph g = apply_permutation(p3, {1, 0, 2});  // new 0 is old 1, the center
    CHECK(g.adj(0, 1));
    CHECK(g.adj(0, 2));
    CHECK_FALSE(g.adj(1, 2));
}

TEST_CASE("canonical form is reproduced by its own order") {
    for (const Graph& g : graphs_up_to_iso(5)) {
        CanonicalForm cf = canonical_form(g);
        CHECK(cf.graph == apply_permutation(g, cf.order));
        VertexSet seen = 0;
        for (int v : cf.order) seen |= bit(v);
        CHECK(seen == g.vertices());
    }
}

TEST_CASE("isomorphic relabelings collide, different graphs do not") {
    Graph p4 = path_graph(4);
    std::string canon = canonical_graph6(p4);
    CHECK(canonical_graph6(apply_permutation(p4, {3, 1, 0, 2})) == canon);
    CHECK(canonical_graph6(apply_permutation(p4, {2, 0, 3, 1})) == canon);
    CHECK(canonical_graph6(cycle_graph(4)) != canon);
    CHECK(canonical_graph6(complete_graph(4)) != canon);
    CHECK(canonical_graph6(complement(p4)) == canon);  // self-complementary
}

TEST_CASE("canonical codes separate all classes on a level") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> codes;
        for (const Graph& g : graphs_up_to_iso(n)) codes.insert(canonical_code(g));
        CHECK(codes.size() == graphs_up_to_iso(n).size());
    }
}

TEST_CASE("class counts match the classical sequence") {
    const size_t want[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) CHECK(graphs_up_to_iso(n).size() == want[n - 1]);
}

TEST_SUITE_END();
