#pragma once

#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lcw/graph.hpp"

namespace lcw {

enum class StepKind { Insert, JoinLabels, Relabel };

// Insert: a = vertex id, b = label. JoinLabels: a, b = the two labels.
// Relabel: a = from, b = to.
struct LcwStep {
    StepKind kind;
    int a = 0;
    int b = 0;
    bool operator==(const LcwStep&) const = default;
};

inline LcwStep insert_step(int v, int l) { return {StepKind::Insert, v, l}; }
inline LcwStep join_step(int i, int j) { return {StepKind::JoinLabels, i, j}; }
inline LcwStep relabel_step(int from, int to) { return {StepKind::Relabel, from, to}; }

struct ExprError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LcwExpression {
    std::vector<LcwStep> steps;

    // number of distinct label values appearing anywhere
    int width() const;
    bool operator==(const LcwExpression&) const = default;
};

struct LabeledGraph {
    Graph graph;
    std::vector<int> labels;  // vertex -> current label
};

// Runs the expression. Throws ExprError on duplicate vertex ids, ids not
// forming 0..k-1, non-positive labels, or equal-label join/relabel steps.
LabeledGraph evaluate(const LcwExpression& expr);

// True iff the expression evaluates exactly to target (same ids, same edge
// set; labels and isomorphism play no part). Propagates evaluate errors.
bool verify(const LcwExpression& expr, const Graph& target);

// Labels that never take part in a JoinLabels step and are never the source
// of a Relabel: vertices may be relabeled *into* a sink, but a sink never
// feeds edges or hands its vertices on.
std::set<int> sink_labels(const LcwExpression& expr);

// Rewrites vertex ids: each Insert(v, l) becomes Insert(new_id[v], l).
LcwExpression remap_vertices(const LcwExpression& expr, const std::vector<int>& new_id);

// Renames label values by live intervals: a value is reused once every vertex
// holding it has moved on. Drops join/relabel steps that touch an empty label
// (they cannot affect the graph). The result evaluates to the same labeled
// graph up to label names, and its width equals the maximum number of
// simultaneously inhabited labels of the input.
LcwExpression compact_labels(const LcwExpression& expr);

// Inflation composition: replays eh, replacing the insertion of skeleton
// vertex v by the whole construction of parts[v] in a reserved label pool,
// which is then relabeled wholesale to v's label. Pool values are disjoint
// from eh's labels and shared across parts, so
// width <= width(eh) + max width(parts). Vertex ids come out block-contiguous
// in skeleton order, matching inflate().
LcwExpression compose_inflation(const LcwExpression& eh, const std::vector<LcwExpression>& parts);

enum class FlatKind { Complete, AntiComplete };

// Join (Complete) or disjoint union (AntiComplete) of the parts using one
// reserved sink label: each finished part is joined label-by-label to the
// sink (Complete only) and then relabeled into it.
// width <= 1 + max width(parts).
LcwExpression compose_flat(FlatKind kind, const std::vector<LcwExpression>& parts);

// Same graph, but the expression begins by inserting v with a fresh private
// label that v keeps throughout; joins touching the label v would have held
// are mirrored onto the private label. width <= width(e) + 1.
LcwExpression reorder_front(const LcwExpression& e, int v);

// Prime composition: builds parts[x] first (x must maximize part width),
// relabels it to x's tracked label in reorder_front(eh, x), then proceeds as
// compose_inflation for the remaining parts. Label values are reused between
// the two phases, so
// width <= max(width(parts[x]), width(eh) + 1 + second-max part width).
LcwExpression compose_prime(const LcwExpression& eh, const std::vector<LcwExpression>& parts,
                            int x);

// Line-oriented text: "I v l" / "J i j" / "R i j", one step per line;
// '#' starts a comment, blank lines are skipped.
std::string to_text(const LcwExpression& expr);
LcwExpression parse_expression(std::istream& in);

nlohmann::json to_json(const LcwExpression& expr);
LcwExpression expression_from_json(const nlohmann::json& j);

}  // namespace lcw
