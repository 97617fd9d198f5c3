#include "lcw/corpus.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lcw/canonical.hpp"
#include "lcw/modular.hpp"

namespace lcw {

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
}

bool Rng::chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p;
}

Graph gnp(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

LcwExpression rand_expression(int n, int max_label, Rng& rng) {
    if (n < 1 || max_label < 1) throw std::invalid_argument("rand_expression: bad parameters");
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[static_cast<size_t>(i)],
                                              order[static_cast<size_t>(rng.uniform(0, i))]);
    LcwExpression e;
    for (int v : order) {
        e.steps.push_back(insert_step(v, rng.uniform(1, max_label)));
        while (max_label >= 2 && rng.chance(0.4)) {
            int i = rng.uniform(1, max_label);
            int j = rng.uniform(1, max_label - 1);
            if (j >= i) ++j;  // distinct pair
            e.steps.push_back(rng.chance(0.5) ? join_step(i, j) : relabel_step(i, j));
        }
    }
    return e;
}

namespace {

const std::vector<Graph>& prime_pool() {
    static const std::vector<Graph> pool = [] {
        std::vector<Graph> out;
        out.push_back(path_graph(4));
        for (const Graph& g : graphs_up_to_iso(5))
            if (is_connected(g) && is_prime(g)) out.push_back(g);
        return out;
    }();
    return pool;
}

}  // namespace

Graph rand_modular_graph(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("rand_modular_graph: n >= 1 required");
    if (n == 1) return complete_graph(1);
    int kind = rng.uniform(0, n >= 4 ? 4 : 3);
    if (kind == 4) {
        // inflate a small prime skeleton
        std::vector<Graph> fits;
        for (const Graph& p : prime_pool())
            if (p.n() <= n) fits.push_back(p);
        const Graph& skel = fits[static_cast<size_t>(rng.uniform(0, static_cast<int>(fits.size()) - 1))];
        std::vector<int> sizes(static_cast<size_t>(skel.n()), 1);
        for (int extra = n - skel.n(); extra > 0; --extra)
            ++sizes[static_cast<size_t>(rng.uniform(0, skel.n() - 1))];
        std::vector<Graph> parts;
        for (int sz : sizes) parts.push_back(rand_modular_graph(sz, rng));
        return inflate(skel, parts).graph;
    }
    int a = rng.uniform(1, n - 1);
    Graph left = rand_modular_graph(a, rng);
    Graph right = rand_modular_graph(n - a, rng);
    return kind < 2 ? disjoint_union(left, right) : join(left, right);
}

}  // namespace lcw
