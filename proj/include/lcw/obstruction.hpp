#pragma once

#include <optional>
#include <vector>

#include "lcw/graph.hpp"

#include "json.hpp"

namespace lcw {

struct Embedding {
    std::vector<int> map;  // pattern vertex -> host vertex, injective
};

// Adjacency and non-adjacency both preserved under the map.
bool embedding_valid(const Graph& pattern, const Graph& host, const Embedding& emb);

// Complete backtracking search for an induced copy of pattern in host.
// Deterministic: most-constrained pattern vertex first, host ids ascending.
std::optional<Embedding> induced_embed(const Graph& pattern, const Graph& host);

// Smallest t such that gen_Q(t) does not embed into g. Bounded by the first
// t with 2^t - 1 > g.n, so the scan always terminates.
int qt_avoidance_index(const Graph& g);
int coqt_avoidance_index(const Graph& g);

struct Obstruction {
    bool is_co;  // pattern was gen_coQ(index) rather than gen_Q(index)
    int index;
    Embedding emb;
};

// First of gen_Q(t), gen_coQ(s) found inside host, if either embeds.
std::optional<Obstruction> find_obstruction(const Graph& host, int t, int s);

nlohmann::json embedding_json(const Graph& pattern, const Graph& host, const Embedding& emb);

}  // namespace lcw
