#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

#include "lcw/canonical.hpp"
#include "lcw/exact.hpp"
#include "lcw/expression.hpp"
#include "lcw/graph.hpp"
#include "lcw/pipeline.hpp"
#include "lcw/qt.hpp"

using namespace lcw;

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("oracle returns verified expressions on the caller's ids") {
    PrimeOracle oracle(12);
    Graph p4 = apply_permutation(path_graph(4), {2, 0, 3, 1});
    LcwExpression e = oracle.expression_for(p4);
    CHECK(verify(e, p4));
    CHECK(e.width() == 3);
    CHECK(oracle.lcw_of(p4) == 3);
    CHECK(oracle.lcw_of(path_graph(4)) == 3);  // same class, memo hit
    CHECK_THROWS_AS(PrimeOracle(0), std::invalid_argument);
}

TEST_CASE("oracle forwards the budget") {
    PrimeOracle tight(2);
    CHECK(tight.lcw_of(cycle_graph(4)) == 2);
    CHECK_THROWS_AS(tight.lcw_of(path_graph(4)), BudgetExceeded);
}

TEST_CASE("oracle cache file round trips and survives corruption") {
    std::string path = "oracle_cache_test.tsv";
    std::remove(path.c_str());
    {
        PrimeOracle writer(12, path);
        CHECK(writer.lcw_of(path_graph(4)) == 3);
        CHECK(writer.lcw_of(cycle_graph(5)) == 4);
    }
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        CHECK(line.find('\t') != std::string::npos);
    }
    CHECK(lines == 2);
    {
        std::ofstream app(path, std::ios::app);
        app << "garbage line without tab\n";
        app << "Ch\t[{\"op\":\"bogus\"}]\n";
    }
    PrimeOracle reader(12, path);
    CHECK(reader.lcw_of(path_graph(4)) == 3);
    std::remove(path.c_str());
}

TEST_CASE("builder achieves known widths") {
    PrimeOracle oracle(12);
    CHECK(build_expression(complete_graph(1), oracle).width == 1);
    CHECK(build_expression(empty_graph(6), oracle).width == 1);
    CHECK(build_expression(complete_graph(6), oracle).width == 2);
    CHECK(build_expression(path_graph(4), oracle).width == 3);   // prime: oracle verbatim
    CHECK(build_expression(cycle_graph(4), oracle).width == 2);
    CHECK(build_expression(gen_Q(4), oracle).width >= 3);        // upper bound only
}

TEST_CASE("builder output always verifies and its audit adds up") {
    PrimeOracle oracle(12);
    Graph g = inflate(path_graph(4), {complete_graph(2), complete_graph(1), empty_graph(2),
                                      complete_graph(1)}).graph;
    BuildResult r = build_expression(g, oracle);
    CHECK(verify(r.expr, g));
    CHECK(r.audit["kind"] == "prime");
    CHECK(r.audit["skeleton_width"] == 3);
    CHECK(r.audit["width"] == r.width);
    CHECK(r.width <= r.audit["bound"].get<int>());
    CHECK(r.audit["children"].size() == 4);

    BuildResult q3 = build_expression(gen_Q(3), oracle);
    CHECK(q3.audit["kind"] == "anti_complete");
    CHECK(q3.audit["bound"] == 1 + q3.audit["part_widths"][0].get<int>());
}

TEST_CASE("prime profile finds the widest prime piece") {
    PrimeOracle oracle(12);
    PrimeProfile p4 = prime_profile(path_graph(4), 4, oracle);
    CHECK(p4.m == 3);
    REQUIRE(p4.witness.has_value());
    CHECK(canonical_graph6(*p4.witness) == canonical_graph6(path_graph(4)));

    PrimeProfile k5 = prime_profile(complete_graph(5), 5, oracle);
    CHECK(k5.m == 2);  // a single edge is the only prime inside a clique
    REQUIRE(k5.witness.has_value());
    CHECK(k5.witness->n() == 2);

    PrimeProfile e3 = prime_profile(empty_graph(3), 3, oracle);
    CHECK(e3.m == 1);  // the two-vertex non-edge
    REQUIRE(e3.witness.has_value());
    CHECK(*e3.witness == empty_graph(2));

    PrimeProfile k1 = prime_profile(complete_graph(1), 1, oracle);
    CHECK(k1.m == 0);
    CHECK_FALSE(k1.witness.has_value());

    // capping the piece size lowers the profile
    CHECK(prime_profile(path_graph(4), 2, oracle).m == 2);
}

TEST_CASE("theorem report on the four-path") {
    PrimeOracle oracle(12);
    TheoremReport r = theorem_check(path_graph(4), oracle);
    CHECK(r.m == 3);
    CHECK(r.t == 3);
    CHECK(r.s == 3);
    CHECK(r.bound == 30);
    CHECK(r.lcw_value == 3);
    CHECK(r.exact);
    CHECK(r.holds);
    REQUIRE(r.max_prime.has_value());
    CHECK(canonical_graph6(*r.max_prime) == canonical_graph6(path_graph(4)));

    nlohmann::json j = to_json(r);
    CHECK(j["bound"] == 30);
    CHECK(j["missing_qt"] == 3);
    CHECK(j["missing_coqt"] == 3);
    CHECK(j["max_prime"] == "Ch");
}

TEST_CASE("theorem report on the four-cycle") {
    PrimeOracle oracle(12);
    TheoremReport r = theorem_check(cycle_graph(4), oracle);
    CHECK(r.m == 2);
    CHECK(r.t == 2);
    CHECK(r.s == 3);
    CHECK(r.bound == 20);
    CHECK(r.lcw_value == 2);
    CHECK(r.holds);
}

TEST_CASE("size cap only restricts the profile") {
    PrimeOracle oracle(12);
    TheoremReport r = theorem_check(path_graph(4), oracle, 2);
    CHECK(r.m == 2);
    CHECK(r.bound == 24);
    CHECK(r.lcw_value == 3);
    CHECK(r.holds);
}

TEST_CASE("degenerate shape recognizers") {
    CHECK(is_disjoint_cliques(disjoint_union(complete_graph(3), complete_graph(2))));
    CHECK(is_disjoint_cliques(complete_graph(5)));
    CHECK(is_disjoint_cliques(empty_graph(4)));
    CHECK_FALSE(is_disjoint_cliques(path_graph(3)));
    CHECK(is_complete_multipartite(cycle_graph(4)));
    CHECK(is_complete_multipartite(complete_graph(5)));
    CHECK_FALSE(is_complete_multipartite(path_graph(4)));
}

TEST_CASE("degenerate facts hold exhaustively on small levels") {
    DegenerateReport rep = degenerate_facts_check(5);
    CHECK(rep.violations == 0);
    CHECK(rep.all_hold());
    CHECK(rep.total == 1 + 2 + 4 + 11 + 34);
    CHECK(rep.q2_free == 1 + 2 + 3 + 5 + 7);   // partitions of n: complete multipartite classes
    CHECK(rep.p3_free == 1 + 2 + 3 + 5 + 7);   // and their complements
    CHECK_THROWS_AS(degenerate_facts_check(0), std::invalid_argument);
    CHECK_THROWS_AS(degenerate_facts_check(10), std::invalid_argument);
}

TEST_SUITE_END();
