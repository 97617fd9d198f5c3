#pragma once

#include <stdexcept>
#include <string>

#include "lcw/expression.hpp"
#include "lcw/graph.hpp"

namespace lcw {

struct BudgetExceeded : std::runtime_error {
    int budget;
    std::string graph6;
    BudgetExceeded(int budget_, std::string g6)
        : std::runtime_error("label budget " + std::to_string(budget_) + " exceeded on " + g6),
          budget(budget_),
          graph6(std::move(g6)) {}
};

struct ExactResult {
    int width;
    LcwExpression witness;
};

// Minimum width over all expressions evaluating to g, with a witness that
// verifies at exactly that width. Deterministic: iterative deepening on the
// label budget, depth-first over insertions in ascending vertex order, so the
// witness realizes the lexicographically smallest optimal insertion order.
// Throws BudgetExceeded if the optimum is above budget_cap.
ExactResult exact_lcw(const Graph& g, int budget_cap = 12);

// Ground-truth oracle: exhaustive search over concrete expression states
// (label assignment + realized edge set), with no structural assumptions
// beyond symmetry of label names and skipping steps that cannot change the
// state (joins adding no edges, relabels into an empty label). Hard n <= 5.
int naive_lcw(const Graph& g);

}  // namespace lcw
