#include "lcw/exact.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>
#include <vector>

namespace lcw {

namespace {

// Search state for one budget level. A class is a set of placed vertices
// currently sharing a label. Invariants kept by construction:
//   - every edge of g between placed vertices is already realized (joins are
//     emitted eagerly, which loses no generality: any expression can realize
//     each edge at the earliest moment both endpoints are placed), and
//   - all members of a class have the same neighborhood into the unplaced
//     set (stored as `need`); otherwise some pending edge could never be
//     created, since joins and relabels treat a class as a unit.
// Under these invariants the only decisions left are which vertex to insert
// next, whether it opens a class or joins one with matching `need`, and which
// classes to merge when a fresh class is needed at full budget. Merging is
// only ever useful then: it cannot enable anything else, because `need`
// values survive merges while per-class adjacency conditions only get
// stricter.
struct Cls {
    VertexSet members;
    VertexSet need;
};

struct Move {
    enum Kind { NewClass, IntoClass, Merge } kind;
    int v = -1;   // inserted vertex (NewClass/IntoClass)
    int c = -1;   // class index (IntoClass target; Merge survivor)
    int d = -1;   // Merge: index of the class folded into c
};

class Solver {
public:
    Solver(const Graph& g, int budget) : g_(g), k_(budget), all_(g.vertices()) {
        for (int v = 0; v < g.n(); ++v) {
            VertexSet t = 0;
            for (int u = 0; u < g.n(); ++u)
                if (u != v && ((g.neighbors(u) ^ g.neighbors(v)) & ~bit(u) & ~bit(v)) == 0)
                    t |= bit(u);
            twins_.push_back(t);
        }
    }

    bool run() { return dfs(); }
    const std::vector<Move>& moves() const { return moves_; }

private:
    bool full_adjacency(const Cls& a, const Cls& b) const {
        VertexSet m = a.members;
        while (m) {
            int v = lowest_vertex(m);
            m &= m - 1;
            if ((g_.neighbors(v) & b.members) != b.members) return false;
        }
        return true;
    }

    std::string key() const {
        std::vector<VertexSet> ms;
        ms.reserve(classes_.size());
        for (const Cls& c : classes_) ms.push_back(c.members);
        std::sort(ms.begin(), ms.end());
        std::string s;
        s.reserve(8 * (ms.size() + 1));
        auto put = [&s](VertexSet x) {
            for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
        };
        put(placed_);
        for (VertexSet m : ms) put(m);
        return s;
    }

    bool insert_into_ok(size_t ci, VertexSet nv) const {
        for (size_t di = 0; di < classes_.size(); ++di) {
            if (di == ci) continue;
            VertexSet ov = classes_[di].members & nv;
            if (ov == 0) continue;
            if (ov != classes_[di].members) return false;
            if (!full_adjacency(classes_[ci], classes_[di])) return false;
        }
        return true;
    }

    bool new_class_ok(VertexSet nv) const {
        for (const Cls& d : classes_) {
            VertexSet ov = d.members & nv;
            if (ov != 0 && ov != d.members) return false;
        }
        return true;
    }

    void place(int v, VertexSet nv) {
        placed_ |= bit(v);
        for (Cls& c : classes_) c.need &= ~bit(v);
        (void)nv;
    }

    bool recurse_with_new_class(int v, VertexSet nv) {
        auto saved = classes_;
        VertexSet saved_placed = placed_;
        moves_.push_back({Move::NewClass, v, -1, -1});
        place(v, nv);
        classes_.push_back({bit(v), nv & ~placed_});
        if (dfs()) return true;
        classes_ = std::move(saved);
        placed_ = saved_placed;
        moves_.pop_back();
        return false;
    }

    bool dfs() {
        if (placed_ == all_) return true;
        std::string state = key();
        if (failed_.count(state)) return false;

        VertexSet unplaced = all_ & ~placed_;
        VertexSet cand = unplaced;
        while (cand) {
            int v = lowest_vertex(cand);
            cand &= cand - 1;
            // a smaller unplaced twin must go first in a lex-min witness
            if (twins_[static_cast<size_t>(v)] & unplaced & (bit(v) - 1)) continue;
            VertexSet nv = g_.neighbors(v);
            VertexSet nv_unplaced = nv & unplaced & ~bit(v);

            for (size_t ci = 0; ci < classes_.size(); ++ci) {
                if (classes_[ci].need != nv_unplaced) continue;  // also rejects neighbors of v
                if (!insert_into_ok(ci, nv)) continue;
                auto saved = classes_;
                VertexSet saved_placed = placed_;
                moves_.push_back({Move::IntoClass, v, static_cast<int>(ci), -1});
                place(v, nv);
                classes_[ci].members |= bit(v);
                if (dfs()) return true;
                classes_ = std::move(saved);
                placed_ = saved_placed;
                moves_.pop_back();
            }

            if (!new_class_ok(nv)) continue;
            if (static_cast<int>(classes_.size()) < k_) {
                if (recurse_with_new_class(v, nv)) return true;
            } else {
                for (size_t i = 0; i + 1 < classes_.size(); ++i)
                    for (size_t j = i + 1; j < classes_.size(); ++j) {
                        if (classes_[i].need != classes_[j].need) continue;
                        auto saved = classes_;
                        moves_.push_back({Move::Merge, -1, static_cast<int>(i),
                                          static_cast<int>(j)});
                        classes_[i].members |= classes_[j].members;
                        classes_.erase(classes_.begin() + static_cast<long>(j));
                        if (recurse_with_new_class(v, nv)) return true;
                        classes_ = std::move(saved);
                        moves_.pop_back();
                    }
            }
        }
        failed_.insert(std::move(state));
        return false;
    }

    const Graph& g_;
    int k_;
    VertexSet all_;
    VertexSet placed_ = 0;
    std::vector<Cls> classes_;
    std::vector<VertexSet> twins_;
    std::vector<Move> moves_;
    std::unordered_set<std::string> failed_;
};

// Replay the solver's move list, assigning concrete label values from a free
// pool (smallest value first, values recycled by merges) and emitting the
// eager joins that realize each inserted vertex's placed neighborhood.
LcwExpression witness_from_moves(const Graph& g, const std::vector<Move>& moves) {
    LcwExpression out;
    std::vector<VertexSet> members;
    std::vector<int> value;
    std::set<int> free_values;
    int fresh = 0;
    auto allocate = [&]() {
        if (!free_values.empty()) {
            int v = *free_values.begin();
            free_values.erase(free_values.begin());
            return v;
        }
        return ++fresh;
    };
    for (const Move& m : moves) {
        switch (m.kind) {
            case Move::NewClass: {
                int a = allocate();
                out.steps.push_back(insert_step(m.v, a));
                for (size_t d = 0; d < members.size(); ++d)
                    if (members[d] & g.neighbors(m.v))
                        out.steps.push_back(join_step(a, value[d]));
                members.push_back(bit(m.v));
                value.push_back(a);
                break;
            }
            case Move::IntoClass: {
                size_t ci = static_cast<size_t>(m.c);
                out.steps.push_back(insert_step(m.v, value[ci]));
                for (size_t d = 0; d < members.size(); ++d)
                    if (d != ci && (members[d] & g.neighbors(m.v)))
                        out.steps.push_back(join_step(value[ci], value[d]));
                members[ci] |= bit(m.v);
                break;
            }
            case Move::Merge: {
                size_t ci = static_cast<size_t>(m.c), dj = static_cast<size_t>(m.d);
                out.steps.push_back(relabel_step(value[dj], value[ci]));
                free_values.insert(value[dj]);
                members[ci] |= members[dj];
                members.erase(members.begin() + static_cast<long>(dj));
                value.erase(value.begin() + static_cast<long>(dj));
                break;
            }
        }
    }
    return out;
}

}  // namespace

ExactResult exact_lcw(const Graph& g, int budget_cap) {
    if (g.n() < 1) throw std::invalid_argument("exact_lcw: graph must have a vertex");
    if (budget_cap < 1) throw std::invalid_argument("exact_lcw: budget must be positive");
    for (int k = 1; k <= std::min(budget_cap, g.n()); ++k) {
        Solver solver(g, k);
        if (!solver.run()) continue;
        LcwExpression witness = witness_from_moves(g, solver.moves());
        if (!verify(witness, g) || witness.width() != k)
            throw std::logic_error("exact_lcw: witness reconstruction failed");
        return {k, std::move(witness)};
    }
    throw BudgetExceeded(budget_cap, to_graph6(g));
}

namespace {

// canonical state code: realized-edge bits, then per-vertex labels renamed
// by first appearance so label names carry no information
std::uint64_t naive_encode(int n, const std::array<int, 5>& labels, std::uint32_t realized) {
    std::uint64_t code = realized;
    std::array<int, 6> rename{};
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int l = labels[static_cast<size_t>(v)];
        int c = 0;
        if (l != 0) {
            if (rename[static_cast<size_t>(l)] == 0) rename[static_cast<size_t>(l)] = ++next;
            c = rename[static_cast<size_t>(l)];
        }
        code |= static_cast<std::uint64_t>(c) << (10 + 3 * v);
    }
    return code;
}

struct NaiveSearch {
    const Graph& g;
    int n;
    int k;
    std::uint32_t target = 0;
    std::unordered_set<std::uint64_t> visited;

    int pair_bit(int u, int v) const {
        if (u > v) std::swap(u, v);
        return u * n - u * (u + 1) / 2 + (v - u - 1);  // triangular index, < 10 for n <= 5
    }

    bool go(const std::array<int, 5>& labels, std::uint32_t realized) {
        if (!visited.insert(naive_encode(n, labels, realized)).second) return false;

        std::array<VertexSet, 6> cls{};
        VertexSet placed = 0;
        for (int v = 0; v < n; ++v) {
            int l = labels[static_cast<size_t>(v)];
            if (l == 0) continue;
            cls[static_cast<size_t>(l)] |= bit(v);
            placed |= bit(v);
        }
        if (placed == g.vertices() && realized == target) return true;

        for (int v = 0; v < n; ++v) {
            if (placed & bit(v)) continue;
            for (int l = 1; l <= k; ++l) {
                auto next = labels;
                next[static_cast<size_t>(v)] = l;
                if (go(next, realized)) return true;
            }
        }
        for (int i = 1; i <= k; ++i) {
            if (!cls[static_cast<size_t>(i)]) continue;
            for (int j = i + 1; j <= k; ++j) {
                if (!cls[static_cast<size_t>(j)]) continue;
                std::uint32_t grown = realized;
                bool legal = true;
                for_each_vertex(cls[static_cast<size_t>(i)], [&](int u) {
                    if ((g.neighbors(u) & cls[static_cast<size_t>(j)]) !=
                        cls[static_cast<size_t>(j)]) {
                        legal = false;
                        return;
                    }
                    for_each_vertex(cls[static_cast<size_t>(j)], [&](int w) {
                        grown |= std::uint32_t{1} << pair_bit(u, w);
                    });
                });
                if (legal && grown != realized && go(labels, grown)) return true;
            }
        }
        for (int i = 1; i <= k; ++i) {
            if (!cls[static_cast<size_t>(i)]) continue;
            for (int j = 1; j <= k; ++j) {
                // relabeling into an empty label is a pure rename: same state
                if (i == j || !cls[static_cast<size_t>(j)]) continue;
                auto next = labels;
                for (int u = 0; u < n; ++u)
                    if (next[static_cast<size_t>(u)] == i) next[static_cast<size_t>(u)] = j;
                if (go(next, realized)) return true;
            }
        }
        return false;
    }
};

}  // namespace

int naive_lcw(const Graph& g) {
    if (g.n() < 1 || g.n() > 5) throw std::invalid_argument("naive_lcw: supported for 1 <= n <= 5");
    for (int k = 1; k <= g.n(); ++k) {
        NaiveSearch search{g, g.n(), k, 0, {}};
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (g.adj(u, v)) search.target |= std::uint32_t{1} << search.pair_bit(u, v);
        if (search.go({}, 0)) return k;
    }
    return g.n();  // unreachable: n labels always suffice
}

}  // namespace lcw
