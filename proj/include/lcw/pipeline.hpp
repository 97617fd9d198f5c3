#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lcw/exact.hpp"
#include "lcw/expression.hpp"
#include "lcw/graph.hpp"

#include "json.hpp"

namespace lcw {

// Memoized source of verified expressions, intended for the prime graphs
// that the builder cannot decompose further. Keys are the graph6 of a
// canonical form; entries are translated back through the canonical order
// and re-verified on the way out, so a bad cache line cannot go unnoticed.
class PrimeOracle {
public:
    explicit PrimeOracle(int budget = 12);
    PrimeOracle(int budget, const std::string& cache_path);  // loads + appends

    LcwExpression expression_for(const Graph& g);
    int lcw_of(const Graph& g);
    int budget() const { return budget_; }

private:
    int budget_;
    std::string cache_path_;
    std::mutex mu_;
    std::map<std::string, LcwExpression> memo_;  // canonical g6 -> expression
};

struct BuildResult {
    LcwExpression expr;
    int width;
    nlohmann::json audit;  // per-node widths and bounds, nested
};

// Decompose, build the parts recursively, compose. The result is verified
// against g before it is returned.
BuildResult build_expression(const Graph& g, PrimeOracle& oracle);

struct PrimeProfile {
    int m = 0;
    std::optional<Graph> witness;  // a prime induced subgraph attaining m
};

// Max exact lcw over prime induced subgraphs on at most size_cap vertices,
// by exhaustive subset enumeration; requires g.n <= 15. A connected prime
// never misses: the only disconnected prime is the two-vertex edgeless
// graph, detected separately.
PrimeProfile prime_profile(const Graph& g, int size_cap, PrimeOracle& oracle);

struct TheoremReport {
    int m = 0;
    int t = 0;       // first universal quasi-threshold graph not present
    int s = 0;       // co- counterpart
    int bound = 0;   // (m + 2)(t + s)
    int lcw_value = 0;
    bool exact = false;  // lcw_value is exact rather than a builder width
    bool holds = false;  // lcw_value < bound
    std::optional<Graph> max_prime;
};

nlohmann::json to_json(const TheoremReport& r);

// holds must come out true whenever lcw_value is exact; a false result with
// exact set would be a genuine counterexample and not a tolerance issue.
// size_cap limits the induced subgraphs profiled for m; -1 means no cap.
TheoremReport theorem_check(const Graph& g, PrimeOracle& oracle, int size_cap = -1);

bool is_disjoint_cliques(const Graph& g);
bool is_complete_multipartite(const Graph& g);

struct DegenerateReport {
    int total = 0;
    int q2_free = 0;
    int p3_free = 0;
    int violations = 0;
    std::vector<std::string> failing;  // graph6 of violating graphs
    bool all_hold() const { return violations == 0; }
};

// Exhaustively checks, for every graph with n <= max_n: no induced K_2 + K_1
// implies complete multipartite with lcw <= 2, and no induced P_3 implies
// disjoint cliques with lcw <= 3.
DegenerateReport degenerate_facts_check(int max_n = 7);

}  // namespace lcw
