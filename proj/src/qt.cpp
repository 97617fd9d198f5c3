#include "lcw/qt.hpp"

#include <algorithm>
#include <utility>

namespace lcw {

Graph gen_Q(int t) {
    if (t < 1) throw std::invalid_argument("gen_Q: t >= 1 required");
    if (t > 6) throw std::invalid_argument("gen_Q: 2^t - 1 exceeds 64 vertices");
    if (t == 1) return complete_graph(1);
    Graph prev = gen_Q(t - 1);
    return disjoint_union(join(complete_graph(1), prev), prev);
}

Graph gen_coQ(int s) {
    if (s < 1) throw std::invalid_argument("gen_coQ: s >= 1 required");
    if (s > 6) throw std::invalid_argument("gen_coQ: 2^s - 1 exceeds 64 vertices");
    if (s == 1) return complete_graph(1);
    Graph prev = gen_coQ(s - 1);
    return join(disjoint_union(complete_graph(1), prev), prev);
}

std::optional<ForbiddenQuad> find_forbidden_quad(const Graph& g, bool forbid_c4) {
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            for (int c = b + 1; c < g.n(); ++c)
                for (int d = c + 1; d < g.n(); ++d) {
                    int vs[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adj(vs[i], vs[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    int mn = *std::min_element(deg, deg + 4);
                    int mx = *std::max_element(deg, deg + 4);
                    bool p4 = edges == 3 && mn == 1 && mx == 2;
                    bool c4 = edges == 4 && mn == 2 && mx == 2;
                    if (p4 || (forbid_c4 && c4)) return ForbiddenQuad{{a, b, c, d}, c4};
                }
    return std::nullopt;
}

bool is_cograph(const Graph& g) { return !find_forbidden_quad(g, false); }

bool is_quasi_threshold(const Graph& g) { return !find_forbidden_quad(g, true); }

namespace {

int universal_vertex(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.neighbors(v) == (g.vertices() & ~bit(v))) return v;
    return -1;
}

}  // namespace

bool qt_recognize_by_construction(const Graph& g) {
    if (g.n() <= 1) return true;
    if (!is_connected(g)) {
        for (VertexSet comp : components(g))
            if (!qt_recognize_by_construction(induced_subgraph(g, comp))) return false;
        return true;
    }
    int u = universal_vertex(g);
    if (u < 0) return false;
    return qt_recognize_by_construction(induced_subgraph(g, g.vertices() & ~bit(u)));
}

NotQuasiThreshold::NotQuasiThreshold(const ForbiddenQuad& q)
    : std::runtime_error(std::string("not quasi-threshold: induced ") +
                         (q.is_c4 ? "C_4" : "P_4") + " on {" +
                         std::to_string(q.vertices[0]) + ", " + std::to_string(q.vertices[1]) +
                         ", " + std::to_string(q.vertices[2]) + ", " +
                         std::to_string(q.vertices[3]) + "}"),
      quad(q) {}

namespace {

// Returns t and the image of each vertex inside gen_Q(t). Assumes g is
// quasi-threshold; mirrors the inductive case split exactly.
std::pair<int, std::vector<std::uint64_t>> embed_rec(const Graph& g) {
    int n = g.n();
    if (n <= 1) return {1, std::vector<std::uint64_t>(static_cast<size_t>(n), 0)};
    if (is_connected(g)) {
        int u = universal_vertex(g);
        if (u < 0) throw std::logic_error("embed_rec: connected input has no universal vertex");
        VertexSet others = g.vertices() & ~bit(u);
        auto [a, emb] = embed_rec(induced_subgraph(g, others));
        std::vector<std::uint64_t> map(static_cast<size_t>(n));
        map[static_cast<size_t>(u)] = 0;  // apex
        std::vector<int> order = set_to_vector(others);
        for (size_t i = 0; i < order.size(); ++i)
            map[static_cast<size_t>(order[i])] = emb[i] + 1;  // joined copy
        return {a + 1, map};
    }
    auto comps = components(g);
    VertexSet rest = 0;
    for (size_t i = 1; i < comps.size(); ++i) rest |= comps[i];
    auto [a, emb1] = embed_rec(induced_subgraph(g, comps[0]));
    auto [b, emb2] = embed_rec(induced_subgraph(g, rest));
    int m = std::max(a, b);
    // Lift each side into Q_m: the joined copy sits at offset 1 per level.
    int t = m + 1;
    std::vector<std::uint64_t> map(static_cast<size_t>(n));
    std::vector<int> left = set_to_vector(comps[0]);
    for (size_t i = 0; i < left.size(); ++i)
        map[static_cast<size_t>(left[i])] = emb1[i] + static_cast<std::uint64_t>(m - a) + 1;
    std::vector<int> right = set_to_vector(rest);
    for (size_t i = 0; i < right.size(); ++i)
        map[static_cast<size_t>(right[i])] =
            emb2[i] + static_cast<std::uint64_t>(m - b) + (std::uint64_t{1} << m);
    return {t, map};
}

}  // namespace

UniversalEmbedding universal_embed(const Graph& g) {
    if (auto quad = find_forbidden_quad(g, true)) throw NotQuasiThreshold(*quad);
    auto [t, map] = embed_rec(g);
    return {t, std::move(map)};
}

bool qt_adjacent(int t, std::uint64_t u, std::uint64_t v) {
    if (t < 1 || t > 64) throw std::invalid_argument("qt_adjacent: t out of range");
    // ids run over 0 .. 2^t - 2; at t = 64 that is everything but ~0
    if (t < 64) {
        std::uint64_t size = (std::uint64_t{1} << t) - 1;
        if (u >= size || v >= size) throw std::invalid_argument("qt_adjacent: id out of range");
    } else if (u == ~std::uint64_t{0} || v == ~std::uint64_t{0}) {
        throw std::invalid_argument("qt_adjacent: id out of range");
    }
    while (true) {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        if (u == 0) return v < (std::uint64_t{1} << (t - 1));  // apex joined to the left copy
        std::uint64_t half = std::uint64_t{1} << (t - 1);
        if (v < half) {  // both in the joined copy
            --u;
            --v;
        } else if (u >= half) {  // both in the plain copy
            u -= half;
            v -= half;
        } else {
            return false;  // different copies
        }
        --t;
    }
}

bool universal_embedding_valid(const Graph& g, const UniversalEmbedding& ue) {
    if (ue.t < 1 || ue.t > 64) return false;
    if (ue.map.size() != static_cast<size_t>(g.n())) return false;
    std::uint64_t limit =
        ue.t < 64 ? (std::uint64_t{1} << ue.t) - 1 : ~std::uint64_t{0};
    for (std::uint64_t id : ue.map)
        if (id >= limit) return false;
    std::vector<std::uint64_t> sorted = ue.map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adj(u, v) != qt_adjacent(ue.t, ue.map[static_cast<size_t>(u)],
                                           ue.map[static_cast<size_t>(v)]))
                return false;
    return true;
}

}  // namespace lcw
