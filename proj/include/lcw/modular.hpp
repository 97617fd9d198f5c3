#pragma once

#include <string>
#include <vector>

#include "lcw/graph.hpp"

#include "json.hpp"

namespace lcw {

// A module is a vertex set whose members are indistinguishable from outside:
// every vertex not in the set is adjacent to all of it or none of it.
bool is_module(const Graph& g, VertexSet m);

// Every module of g, trivial ones included. Exponential scan; n <= 15.
std::vector<VertexSet> all_modules_brute(const Graph& g);

// Smallest module containing the seed set.
VertexSet module_closure(const Graph& g, VertexSet seed);

// The maximal modules that are proper subsets of V and overlap no other
// module in the list. Requires g connected and co-connected.
std::vector<VertexSet> maximal_proper_strong_modules(const Graph& g);

// No modules except singletons and V itself. Throws on n < 2.
bool is_prime(const Graph& g);
bool is_prime_brute(const Graph& g);  // n <= 15

enum class SkeletonKind { Complete, AntiComplete, Prime };

struct SkeletonDecomposition {
    SkeletonKind kind;
    Graph skeleton;                   // quotient on the modules
    std::vector<VertexSet> modules;   // ordered by smallest member
    std::vector<int> block_of;        // vertex -> index into modules
};

// One level of modular decomposition: components if disconnected,
// co-components if the complement is disconnected, else the (prime)
// quotient on maximal proper strong modules. Throws on n < 2.
SkeletonDecomposition decompose_one_stage(const Graph& g);

nlohmann::json to_json(const SkeletonDecomposition& d);

}  // namespace lcw
