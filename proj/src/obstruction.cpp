#include "lcw/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "lcw/qt.hpp"

namespace lcw {

bool embedding_valid(const Graph& pattern, const Graph& host, const Embedding& emb) {
    if (static_cast<int>(emb.map.size()) != pattern.n()) return false;
    for (int h : emb.map)
        if (h < 0 || h >= host.n()) return false;
    for (int u = 0; u < pattern.n(); ++u)
        for (int v = u + 1; v < pattern.n(); ++v) {
            int hu = emb.map[static_cast<size_t>(u)];
            int hv = emb.map[static_cast<size_t>(v)];
            if (hu == hv) return false;
            if (pattern.adj(u, v) != host.adj(hu, hv)) return false;
        }
    return true;
}

namespace {

struct EmbedSearch {
    const Graph& pattern;
    const Graph& host;
    std::vector<int> order;
    std::vector<int> map;
    VertexSet used = 0;

    bool place(size_t depth) {
        if (depth == order.size()) return true;
        int p = order[depth];
        for (int h = 0; h < host.n(); ++h) {
            if (used & bit(h)) continue;
            if (host.degree(h) < pattern.degree(p)) continue;
            bool ok = true;
            for (size_t j = 0; j < depth && ok; ++j) {
                int q = order[j];
                if (pattern.adj(p, q) != host.adj(h, map[static_cast<size_t>(q)])) ok = false;
            }
            if (!ok) continue;
            map[static_cast<size_t>(p)] = h;
            used |= bit(h);
            if (place(depth + 1)) return true;
            used &= ~bit(h);
            map[static_cast<size_t>(p)] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> induced_embed(const Graph& pattern, const Graph& host) {
    if (pattern.n() > host.n()) return std::nullopt;
    EmbedSearch s{pattern, host,
                  std::vector<int>(static_cast<size_t>(pattern.n())),
                  std::vector<int>(static_cast<size_t>(pattern.n()), -1)};
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    if (!s.place(0)) return std::nullopt;
    return Embedding{std::move(s.map)};
}

int qt_avoidance_index(const Graph& g) {
    for (int t = 1;; ++t) {
        if ((1LL << t) - 1 > g.n()) return t;
        if (!induced_embed(gen_Q(t), g)) return t;
    }
}

int coqt_avoidance_index(const Graph& g) {
    for (int s = 1;; ++s) {
        if ((1LL << s) - 1 > g.n()) return s;
        if (!induced_embed(gen_coQ(s), g)) return s;
    }
}

std::optional<Obstruction> find_obstruction(const Graph& host, int t, int s) {
    if (auto e = induced_embed(gen_Q(t), host)) return Obstruction{false, t, std::move(*e)};
    if (auto e = induced_embed(gen_coQ(s), host)) return Obstruction{true, s, std::move(*e)};
    return std::nullopt;
}

nlohmann::json embedding_json(const Graph& pattern, const Graph& host, const Embedding& emb) {
    return {{"pattern", to_graph6(pattern)}, {"host", to_graph6(host)}, {"map", emb.map}};
}

}  // namespace lcw
