#pragma once

#include <cstdint>
#include <random>

#include "lcw/expression.hpp"
#include "lcw/graph.hpp"

namespace lcw {

// Stable per-item seed derivation, so parallel sweeps stay deterministic.
std::uint64_t mix(std::uint64_t seed, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi);  // inclusive bounds
    bool chance(double p);
    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

Graph gnp(int n, double p, Rng& rng);

// Well-formed by construction: all of 0..n-1 inserted in shuffled order with
// labels from 1..max_label, joins and relabels sprinkled in between.
LcwExpression rand_expression(int n, int max_label, Rng& rng);

// Random recursion over disjoint union, join, and inflation of prime
// skeletons on at most 5 vertices. Exactly n vertices; every prime quotient
// in its decomposition tree comes from that small pool.
Graph rand_modular_graph(int n, Rng& rng);

}  // namespace lcw
