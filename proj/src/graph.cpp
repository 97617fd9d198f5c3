#include "lcw/graph.hpp"

#include <algorithm>
#include <sstream>

namespace lcw {

std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

VertexSet vector_to_set(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= bit(v);
    return s;
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adj(u, v)) c.add_edge(u, v);
    return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.n() + h.n() > Graph::max_vertices)
        throw std::invalid_argument("disjoint_union: too many vertices");
    Graph r(g.n() + h.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adj(u, v)) r.add_edge(u, v);
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v)
            if (h.adj(u, v)) r.add_edge(g.n() + u, g.n() + v);
    return r;
}

Graph join(const Graph& g, const Graph& h) {
    Graph r = disjoint_union(g, h);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < h.n(); ++v) r.add_edge(u, g.n() + v);
    return r;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s & ~g.vertices()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> verts = set_to_vector(s);
    Graph r(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.adj(verts[i], verts[j])) r.add_edge(static_cast<int>(i), static_cast<int>(j));
    return r;
}

Inflation inflate(const Graph& h, const std::vector<Graph>& parts) {
    if (static_cast<int>(parts.size()) != h.n())
        throw std::invalid_argument("inflate: need one part per skeleton vertex");
    int total = 0;
    for (const Graph& p : parts) {
        if (p.n() == 0) throw std::invalid_argument("inflate: empty part");
        total += p.n();
    }
    if (total > Graph::max_vertices) throw std::invalid_argument("inflate: too many vertices");

    Inflation out{Graph(total), std::vector<int>(static_cast<size_t>(total))};
    std::vector<int> offset(parts.size());
    int at = 0;
    for (int v = 0; v < h.n(); ++v) {
        offset[static_cast<size_t>(v)] = at;
        for (int i = 0; i < parts[static_cast<size_t>(v)].n(); ++i)
            out.block_of[static_cast<size_t>(at + i)] = v;
        at += parts[static_cast<size_t>(v)].n();
    }
    for (int v = 0; v < h.n(); ++v) {
        const Graph& p = parts[static_cast<size_t>(v)];
        for (int i = 0; i < p.n(); ++i)
            for (int j = i + 1; j < p.n(); ++j)
                if (p.adj(i, j)) out.graph.add_edge(offset[static_cast<size_t>(v)] + i,
                                                    offset[static_cast<size_t>(v)] + j);
    }
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v) {
            if (!h.adj(u, v)) continue;
            for (int i = 0; i < parts[static_cast<size_t>(u)].n(); ++i)
                for (int j = 0; j < parts[static_cast<size_t>(v)].n(); ++j)
                    out.graph.add_edge(offset[static_cast<size_t>(u)] + i,
                                       offset[static_cast<size_t>(v)] + j);
        }
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (seen & bit(v)) continue;
        VertexSet comp = bit(v);
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int u) { next |= g.neighbors(u); });
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

std::vector<VertexSet> co_components(const Graph& g) { return components(complement(g)); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adj(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw InputError("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw InputError("graph6: byte out of range");
        return c - 63;
    };
    int n;
    int first = next();
    if (first == 63) {
        int a = next(), b = next(), c = next();
        if (a == 63) throw InputError("graph6: n too large");
        n = (a << 12) | (b << 6) | c;
    } else {
        n = first;
    }
    if (n > Graph::max_vertices) throw InputError("graph6: graph too large for this build");
    Graph g(n);
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(row, col);
            --nbits;
        }
    if (pos != s.size()) throw InputError("graph6: trailing bytes");
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << '\n';
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adj(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(std::istream& in) {
    int n;
    if (!(in >> n)) throw InputError("edge list: missing vertex count");
    if (n < 0 || n > Graph::max_vertices) throw InputError("edge list: vertex count out of range");
    Graph g(n);
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw InputError("edge list: dangling endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("edge list: vertex out of range");
        if (u == v) throw InputError("edge list: self-loop");
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace lcw
