#include "lcw/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcw {

bool is_module(const Graph& g, VertexSet m) {
    if ((m & ~g.vertices()) != 0) throw std::invalid_argument("is_module: set outside graph");
    if (m == 0) return true;
    bool ok = true;
    for_each_vertex(g.vertices() & ~m, [&](int v) {
        VertexSet seen = g.neighbors(v) & m;
        if (seen != 0 && seen != m) ok = false;
    });
    return ok;
}

std::vector<VertexSet> all_modules_brute(const Graph& g) {
    if (g.n() > 15) throw std::invalid_argument("all_modules_brute: n > 15");
    std::vector<VertexSet> out;
    VertexSet all = g.vertices();
    for (VertexSet m = 1; m <= all; ++m)
        if ((m & ~all) == 0 && is_module(g, m)) out.push_back(m);
    return out;
}

VertexSet module_closure(const Graph& g, VertexSet seed) {
    if ((seed & ~g.vertices()) != 0)
        throw std::invalid_argument("module_closure: seed outside graph");
    VertexSet s = seed;
    bool grew = true;
    while (grew) {
        grew = false;
        VertexSet splitters = 0;
        for_each_vertex(g.vertices() & ~s, [&](int v) {
            VertexSet seen = g.neighbors(v) & s;
            if (seen != 0 && seen != s) splitters |= bit(v);
        });
        if (splitters) {
            s |= splitters;
            grew = true;
        }
    }
    return s;
}

std::vector<VertexSet> maximal_proper_strong_modules(const Graph& g) {
    // Valid when g and its complement are both connected: the maximal proper
    // modules then partition V, and the one containing v collects exactly the
    // u whose pair-closure with v stays proper.
    VertexSet all = g.vertices();
    std::vector<VertexSet> parts;
    VertexSet assigned = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (assigned & bit(v)) continue;
        VertexSet part = bit(v);
        for (int u = 0; u < g.n(); ++u) {
            if (u == v || (assigned & bit(u))) continue;
            if (module_closure(g, bit(v) | bit(u)) != all) part |= bit(u);
        }
        parts.push_back(part);
        assigned |= part;
    }
    std::sort(parts.begin(), parts.end(),
              [](VertexSet a, VertexSet b) { return lowest_vertex(a) < lowest_vertex(b); });
    return parts;
}

bool is_prime(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("is_prime: need n >= 2");
    if (g.n() == 2) return true;
    if (!is_connected(g) || !is_connected(complement(g))) return false;
    for (VertexSet part : maximal_proper_strong_modules(g))
        if (popcount(part) != 1) return false;
    return true;
}

bool is_prime_brute(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("is_prime_brute: need n >= 2");
    for (VertexSet m : all_modules_brute(g))
        if (popcount(m) != 1 && m != g.vertices()) return false;
    return true;
}

namespace {

Graph quotient_on(const Graph& g, const std::vector<VertexSet>& parts) {
    Graph q(static_cast<int>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (g.adj(lowest_vertex(parts[i]), lowest_vertex(parts[j])))
                q.add_edge(static_cast<int>(i), static_cast<int>(j));
    return q;
}

}  // namespace

SkeletonDecomposition decompose_one_stage(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("decompose_one_stage: need n >= 2");
    SkeletonDecomposition d;
    if (!is_connected(g)) {
        d.kind = SkeletonKind::AntiComplete;
        d.modules = components(g);
        d.skeleton = empty_graph(static_cast<int>(d.modules.size()));
    } else if (!is_connected(complement(g))) {
        d.kind = SkeletonKind::Complete;
        d.modules = co_components(g);
        d.skeleton = complete_graph(static_cast<int>(d.modules.size()));
    } else {
        d.kind = SkeletonKind::Prime;
        d.modules = maximal_proper_strong_modules(g);
        d.skeleton = quotient_on(g, d.modules);
    }
    d.block_of.assign(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < d.modules.size(); ++i)
        for_each_vertex(d.modules[i],
                        [&](int v) { d.block_of[static_cast<size_t>(v)] = static_cast<int>(i); });
    return d;
}

nlohmann::json to_json(const SkeletonDecomposition& d) {
    const char* kind = d.kind == SkeletonKind::Complete       ? "Complete"
                       : d.kind == SkeletonKind::AntiComplete ? "AntiComplete"
                                                              : "Prime";
    nlohmann::json mods = nlohmann::json::array();
    for (VertexSet m : d.modules) mods.push_back(set_to_vector(m));
    return {{"kind", kind}, {"skeleton", to_graph6(d.skeleton)}, {"modules", mods}};
}

}  // namespace lcw
