#include "doctest.h"

#include "lcw/canonical.hpp"
#include "lcw/exact.hpp"
#include "lcw/expression.hpp"
#include "lcw/graph.hpp"
#include "lcw/qt.hpp"

using namespace lcw;

TEST_SUITE_BEGIN("exact");

TEST_CASE("known widths of small graphs") {
    CHECK(exact_lcw(complete_graph(1)).width == 1);
    CHECK(exact_lcw(complete_graph(2)).width == 2);
    CHECK(exact_lcw(complete_graph(5)).width == 2);
    CHECK(exact_lcw(empty_graph(3)).width == 1);
    CHECK(exact_lcw(empty_graph(6)).width == 1);
    CHECK(exact_lcw(path_graph(3)).width == 2);
    CHECK(exact_lcw(path_graph(4)).width == 3);
    CHECK(exact_lcw(cycle_graph(4)).width == 2);
    // closing the five-cycle costs a label: both ends, a parked label, the
    // new vertex
    CHECK(exact_lcw(cycle_graph(5)).width == 4);
    CHECK(exact_lcw(gen_Q(2)).width == 2);
    CHECK(exact_lcw(gen_Q(3)).width == 3);
}

TEST_CASE("witness verifies at exactly the reported width") {
    for (const Graph& g : {path_graph(5), cycle_graph(5), gen_Q(3), complement(path_graph(5))}) {
        ExactResult r = exact_lcw(g);
        CHECK(verify(r.witness, g));
        CHECK(r.witness.width() == r.width);
    }
}

TEST_CASE("agrees with the concrete-state search through four vertices") {
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : graphs_up_to_iso(n)) {
            CAPTURE(to_graph6(g));
            CHECK(exact_lcw(g).width == naive_lcw(g));
        }
}

TEST_CASE("agrees with the concrete-state search on five-vertex spot checks") {
    for (const Graph& g : {path_graph(5), cycle_graph(5), complete_graph(5), empty_graph(5),
                           from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {2, 4}})}) {
        CAPTURE(to_graph6(g));
        CHECK(exact_lcw(g).width == naive_lcw(g));
    }
}

TEST_CASE("budget cap raises instead of lying") {
    CHECK_THROWS_AS(exact_lcw(path_graph(4), 2), BudgetExceeded);
    CHECK(exact_lcw(path_graph(4), 3).width == 3);
    try {
        exact_lcw(path_graph(4), 2);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.budget == 2);
        CHECK(e.graph6 == to_graph6(path_graph(4)));
    }
    CHECK_THROWS_AS(exact_lcw(path_graph(2), 0), std::invalid_argument);
}

TEST_CASE("deterministic witness") {
    ExactResult a = exact_lcw(cycle_graph(6));
    ExactResult b = exact_lcw(cycle_graph(6));
    CHECK(a.width == b.width);
    CHECK(a.witness == b.witness);
}

TEST_SUITE_END();
