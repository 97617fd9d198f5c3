#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcw/graph.hpp"

namespace lcw {

// result.adj(i,j) = g.adj(perm[i], perm[j]); perm maps new position -> old id.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

struct CanonicalForm {
    Graph graph;             // canonical representative
    std::vector<int> order;  // order[i] = original vertex at canonical position i
};

// Equitable-refinement + individualization canonical labeling. Exact (full
// branching, minimum adjacency code over all refinement-consistent orders),
// so isomorphic graphs always map to the same representative.
CanonicalForm canonical_form(const Graph& g);

std::string canonical_graph6(const Graph& g);

// Upper-triangle bits of the canonical graph packed with n; requires n <= 11.
std::uint64_t canonical_code(const Graph& g);

// All isomorphism-class representatives on exactly n vertices, built by
// augmenting the (n-1)-vertex representatives one vertex at a time and
// deduplicating by canonical code. Cached per n; requires n <= 9.
const std::vector<Graph>& graphs_up_to_iso(int n);

}  // namespace lcw
