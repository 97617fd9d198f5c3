#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcw/graph.hpp"

namespace lcw {

// Q_1 = K_1 and Q_t = (K_1 * Q_{t-1}) + Q_{t-1}: apex is vertex 0, the copy
// joined to it starts at 1, the plain copy starts at 2^{t-1}.
Graph gen_Q(int t);

// Complement family, built by its own recursion with the same numbering.
Graph gen_coQ(int s);

struct ForbiddenQuad {
    std::array<int, 4> vertices;  // ascending ids
    bool is_c4;                   // otherwise an induced path
};

// Lexicographically first quadruple inducing P_4 (or C_4 when forbid_c4).
std::optional<ForbiddenQuad> find_forbidden_quad(const Graph& g, bool forbid_c4);

bool is_cograph(const Graph& g);          // no induced P_4
bool is_quasi_threshold(const Graph& g);  // no induced P_4 or C_4

// Independent recognizer: peel universal vertices, split components.
bool qt_recognize_by_construction(const Graph& g);

class NotQuasiThreshold : public std::runtime_error {
public:
    explicit NotQuasiThreshold(const ForbiddenQuad& q);
    ForbiddenQuad quad;
};

struct UniversalEmbedding {
    int t;
    std::vector<std::uint64_t> map;  // vertex of g -> vertex of gen_Q(t)
};

// Induced embedding of a quasi-threshold graph into gen_Q(t), t <= max(n, 1).
// Throws NotQuasiThreshold with a witness otherwise. The host can be far too
// large to materialize (t is only bounded by n), hence the wide ids and the
// implicit adjacency test below.
UniversalEmbedding universal_embed(const Graph& g);

// Adjacency of gen_Q(t) straight from the recursion, valid for all t <= 64.
// Ids run over 0 .. 2^t - 2.
bool qt_adjacent(int t, std::uint64_t u, std::uint64_t v);

// Size, range, injectivity, and induced adjacency against qt_adjacent.
bool universal_embedding_valid(const Graph& g, const UniversalEmbedding& ue);

}  // namespace lcw
