#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcw {

// Vertices are 0..n-1; a VertexSet is a bitmask over them.
using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

// Calls f(v) for each vertex in s, ascending.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

std::vector<int> set_to_vector(VertexSet s);
VertexSet vector_to_set(const std::vector<int>& vs);

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph with bitset adjacency rows. The single-word rows
// cap n at 64, which covers everything this library is used for (Q_6 has 63
// vertices).
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument("Graph: vertex count out of range");
        rows_.assign(static_cast<size_t>(n), 0);
    }

    int n() const { return n_; }
    bool adj(int u, int v) const { return (rows_[static_cast<size_t>(u)] >> v) & 1; }
    VertexSet neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }
    VertexSet vertices() const { return n_ == 64 ? ~VertexSet{0} : (bit(n_) - 1); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        rows_[static_cast<size_t>(u)] |= bit(v);
        rows_[static_cast<size_t>(v)] |= bit(u);
    }

    int edge_count() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += popcount(rows_[static_cast<size_t>(v)]);
        return m / 2;
    }

    int degree(int v) const { return popcount(rows_[static_cast<size_t>(v)]); }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    }

    int n_ = 0;
    std::vector<VertexSet> rows_;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// Vertices of s keep their relative order and are renumbered 0..|s|-1.
Graph induced_subgraph(const Graph& g, VertexSet s);

struct Inflation {
    Graph graph;
    std::vector<int> block_of;  // vertex of the result -> vertex of the skeleton
};

// H[G_v : v in V(H)]: block v occupies a contiguous id range, blocks laid out
// in skeleton vertex order.
Inflation inflate(const Graph& h, const std::vector<Graph>& parts);

// Partition into connected components (resp. components of the complement),
// ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> co_components(const Graph& g);

bool is_connected(const Graph& g);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// graph6, bit-exact per the published format (short form for n < 63, '~'
// long form above that).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Plain text: "n" on the first line, "u v" pairs after.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::istream& in);

}  // namespace lcw
