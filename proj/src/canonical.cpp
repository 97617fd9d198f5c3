#include "lcw/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

namespace lcw {

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n())
        throw std::invalid_argument("apply_permutation: size mismatch");
    Graph r(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.adj(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)])) r.add_edge(i, j);
    return r;
}

namespace {

// Adjacency code under a vertex order: upper-triangle bits, row-major,
// most significant first, so codes compare lexicographically.
std::vector<std::uint64_t> code_under(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    std::vector<std::uint64_t> code((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
    size_t pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++pos)
            if (g.adj(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]))
                code[pos / 64] |= std::uint64_t{1} << (63 - pos % 64);
    return code;
}

// Refine colors until equitable: same color implies same multiset of
// neighbor colors. Colors are renumbered by signature order each pass.
void refine(const Graph& g, std::vector<int>& color) {
    int n = g.n();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[static_cast<size_t>(v)]);
            for_each_vertex(g.neighbors(v), [&](int u) { s.push_back(color[static_cast<size_t>(u)]); });
            std::sort(s.begin() + 1, s.end());
            sig[static_cast<size_t>(v)] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> index;
        for (const auto& [s, v] : sig) index.emplace(s, 0);
        int next = 0;
        for (auto& [s, idx] : index) idx = next++;
        bool changed = false;
        for (const auto& [s, v] : sig) {
            int c = index[s];
            if (c != color[static_cast<size_t>(v)]) changed = true;
            color[static_cast<size_t>(v)] = c;
        }
        if (!changed) return;
    }
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::uint64_t> best_code;
    std::vector<int> best_order;
    bool have_best = false;

    void descend(std::vector<int> color) {
        refine(g, color);
        int n = g.n();
        int k = 0;
        for (int c : color) k = std::max(k, c + 1);
        std::vector<std::vector<int>> cells(static_cast<size_t>(k));
        for (int v = 0; v < n; ++v) cells[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
        int target = -1;
        for (int c = 0; c < k; ++c)
            if (cells[static_cast<size_t>(c)].size() > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            // discrete coloring: color index is a full vertex order
            std::vector<int> order(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) order[static_cast<size_t>(color[static_cast<size_t>(v)])] = v;
            auto code = code_under(g, order);
            if (!have_best || code < best_code) {
                best_code = std::move(code);
                best_order = std::move(order);
                have_best = true;
            }
            return;
        }
        for (int v : cells[static_cast<size_t>(target)]) {
            std::vector<int> child(color);
            for (int u = 0; u < n; ++u) ++child[static_cast<size_t>(u)];
            child[static_cast<size_t>(v)] = 0;  // individualize v ahead of its cell
            descend(std::move(child));
        }
    }
};

std::uint64_t triangle_bits(const Graph& g) {
    std::uint64_t code = 0;
    size_t pos = 0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j, ++pos)
            if (g.adj(i, j)) code |= std::uint64_t{1} << pos;
    return code;
}

// Representatives on m vertices from representatives on m-1: append vertex
// m-1 with every possible neighborhood, dedupe by canonical form.
std::vector<Graph> augment(const std::vector<Graph>& prev, int m) {
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& h : prev) {
        VertexSet masks = m == 1 ? 1 : bit(m - 1);
        for (VertexSet mask = 0; mask < masks; ++mask) {
            Graph cand(m);
            for (int u = 0; u < m - 1; ++u)
                for (int v = u + 1; v < m - 1; ++v)
                    if (h.adj(u, v)) cand.add_edge(u, v);
            for_each_vertex(mask, [&](int u) { cand.add_edge(u, m - 1); });
            Graph canon = canonical_form(cand).graph;
            if (seen.insert(triangle_bits(canon)).second) out.push_back(std::move(canon));
        }
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return std::pair(a.edge_count(), triangle_bits(a)) < std::pair(b.edge_count(), triangle_bits(b));
    });
    return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.n() == 0) return {Graph(0), {}};
    std::vector<int> color(static_cast<size_t>(g.n()), 0);
    CanonSearch search{g, {}, {}, false};
    search.descend(std::move(color));
    return {apply_permutation(g, search.best_order), search.best_order};
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g).graph); }

std::uint64_t canonical_code(const Graph& g) {
    if (g.n() > 11) throw std::invalid_argument("canonical_code: n > 11");
    return (static_cast<std::uint64_t>(g.n()) << 56) | triangle_bits(canonical_form(g).graph);
}

const std::vector<Graph>& graphs_up_to_iso(int n) {
    if (n < 0 || n > 9) throw std::invalid_argument("graphs_up_to_iso: supported for n <= 9");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    for (int m = 0; m <= n; ++m) {
        if (cache.count(m)) continue;
        cache[m] = m == 0 ? std::vector<Graph>{Graph(0)} : augment(cache[m - 1], m);
    }
    return cache[n];
}

}  // namespace lcw
