#include "lcw/expression.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lcw {

namespace {

// distinct labels in order of first appearance
std::vector<int> labels_in_order(const LcwExpression& e) {
    std::vector<int> out;
    auto see = [&](int l) {
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    };
    for (const LcwStep& s : e.steps) {
        if (s.kind == StepKind::Insert) {
            see(s.b);
        } else {
            see(s.a);
            see(s.b);
        }
    }
    return out;
}

LcwExpression rename_labels(const LcwExpression& e, const std::map<int, int>& name) {
    LcwExpression out;
    out.steps.reserve(e.steps.size());
    for (LcwStep s : e.steps) {
        if (s.kind == StepKind::Insert) {
            s.b = name.at(s.b);
        } else {
            s.a = name.at(s.a);
            s.b = name.at(s.b);
        }
        out.steps.push_back(s);
    }
    return out;
}

int max_label(const LcwExpression& e) {
    int m = 0;
    for (const LcwStep& s : e.steps) {
        if (s.kind != StepKind::Insert) m = std::max(m, s.a);
        m = std::max(m, s.b);
    }
    return m;
}

// part labels renamed onto pool[0..], vertex ids shifted by offset
LcwExpression instantiate_part(const LcwExpression& part, const std::vector<int>& pool,
                               int offset, std::vector<int>& used_pool) {
    std::vector<int> order = labels_in_order(part);
    std::map<int, int> name;
    used_pool.clear();
    for (size_t i = 0; i < order.size(); ++i) {
        name[order[i]] = pool.at(i);
        used_pool.push_back(pool.at(i));
    }
    LcwExpression out = rename_labels(part, name);
    for (LcwStep& s : out.steps)
        if (s.kind == StepKind::Insert) s.a += offset;
    return out;
}

void append(LcwExpression& to, const LcwExpression& from) {
    to.steps.insert(to.steps.end(), from.steps.begin(), from.steps.end());
}

std::vector<int> part_offsets(const std::vector<LcwExpression>& parts, const char* who) {
    std::vector<int> offsets;
    int at = 0;
    for (const LcwExpression& p : parts) {
        LabeledGraph lg = evaluate(p);  // validates well-formedness
        if (lg.graph.n() == 0) throw ExprError(std::string(who) + ": empty part");
        offsets.push_back(at);
        at += lg.graph.n();
    }
    if (at > Graph::max_vertices) throw ExprError(std::string(who) + ": too many vertices");
    return offsets;
}

}  // namespace

int LcwExpression::width() const {
    return static_cast<int>(labels_in_order(*this).size());
}

LabeledGraph evaluate(const LcwExpression& expr) {
    std::vector<int> ids;
    for (const LcwStep& s : expr.steps) {
        switch (s.kind) {
            case StepKind::Insert:
                if (s.b <= 0) throw ExprError("evaluate: labels must be positive");
                if (std::find(ids.begin(), ids.end(), s.a) != ids.end())
                    throw ExprError("evaluate: duplicate vertex id");
                ids.push_back(s.a);
                break;
            case StepKind::JoinLabels:
            case StepKind::Relabel:
                if (s.a <= 0 || s.b <= 0) throw ExprError("evaluate: labels must be positive");
                if (s.a == s.b)
                    throw ExprError(s.kind == StepKind::JoinLabels
                                        ? "evaluate: join of a label with itself"
                                        : "evaluate: relabel of a label to itself");
                break;
        }
    }
    int n = static_cast<int>(ids.size());
    if (n > Graph::max_vertices) throw ExprError("evaluate: too many vertices");
    std::vector<int> sorted(ids);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[static_cast<size_t>(i)] != i)
            throw ExprError("evaluate: vertex ids must form 0..k-1");

    LabeledGraph out{Graph(n), std::vector<int>(static_cast<size_t>(n), 0)};
    for (const LcwStep& s : expr.steps) {
        switch (s.kind) {
            case StepKind::Insert:
                out.labels[static_cast<size_t>(s.a)] = s.b;
                break;
            case StepKind::JoinLabels:
                for (int u = 0; u < n; ++u) {
                    if (out.labels[static_cast<size_t>(u)] != s.a) continue;
                    for (int v = 0; v < n; ++v)
                        if (out.labels[static_cast<size_t>(v)] == s.b) out.graph.add_edge(u, v);
                }
                break;
            case StepKind::Relabel:
                for (int& l : out.labels)
                    if (l == s.a) l = s.b;
                break;
        }
    }
    return out;
}

bool verify(const LcwExpression& expr, const Graph& target) {
    return evaluate(expr).graph == target;
}

std::set<int> sink_labels(const LcwExpression& expr) {
    std::vector<int> all = labels_in_order(expr);
    std::set<int> sinks(all.begin(), all.end());
    for (const LcwStep& s : expr.steps) {
        if (s.kind == StepKind::JoinLabels) {
            sinks.erase(s.a);
            sinks.erase(s.b);
        } else if (s.kind == StepKind::Relabel) {
            sinks.erase(s.a);
        }
    }
    return sinks;
}

LcwExpression remap_vertices(const LcwExpression& expr, const std::vector<int>& new_id) {
    LcwExpression out(expr);
    for (LcwStep& s : out.steps)
        if (s.kind == StepKind::Insert) s.a = new_id.at(static_cast<size_t>(s.a));
    return out;
}

LcwExpression compact_labels(const LcwExpression& expr) {
    LcwExpression out;
    std::map<int, int> value;  // live label -> renamed value
    std::map<int, int> count;  // label -> inhabitants
    std::set<int> freed;
    int fresh = 0;
    auto allocate = [&]() {
        if (!freed.empty()) {
            int v = *freed.begin();
            freed.erase(freed.begin());
            return v;
        }
        return ++fresh;
    };
    auto live = [&](int l) { return count.count(l) && count[l] > 0; };
    for (const LcwStep& s : expr.steps) {
        switch (s.kind) {
            case StepKind::Insert:
                if (!live(s.b)) value[s.b] = allocate();
                ++count[s.b];
                out.steps.push_back(insert_step(s.a, value[s.b]));
                break;
            case StepKind::JoinLabels:
                if (live(s.a) && live(s.b))
                    out.steps.push_back(join_step(value[s.a], value[s.b]));
                break;
            case StepKind::Relabel:
                if (!live(s.a)) break;  // nothing to move
                if (live(s.b)) {
                    out.steps.push_back(relabel_step(value[s.a], value[s.b]));
                    freed.insert(value[s.a]);
                } else {
                    value[s.b] = value[s.a];  // pure rename, no step needed
                }
                count[s.b] += count[s.a];
                count[s.a] = 0;
                break;
        }
    }
    return out;
}

LcwExpression compose_inflation(const LcwExpression& eh, const std::vector<LcwExpression>& parts) {
    LabeledGraph h = evaluate(eh);
    if (static_cast<int>(parts.size()) != h.graph.n())
        throw ExprError("compose_inflation: need one part per skeleton vertex");
    std::vector<int> offsets = part_offsets(parts, "compose_inflation");

    int pool_width = 0;
    for (const LcwExpression& p : parts) pool_width = std::max(pool_width, p.width());
    std::vector<int> pool;
    for (int j = 0; j < pool_width; ++j) pool.push_back(max_label(eh) + 1 + j);

    LcwExpression out;
    std::vector<int> used;
    for (const LcwStep& s : eh.steps) {
        if (s.kind != StepKind::Insert) {
            out.steps.push_back(s);
            continue;
        }
        append(out, instantiate_part(parts[static_cast<size_t>(s.a)], pool,
                                     offsets[static_cast<size_t>(s.a)], used));
        for (int p : used) out.steps.push_back(relabel_step(p, s.b));
    }
    return out;
}

LcwExpression compose_flat(FlatKind kind, const std::vector<LcwExpression>& parts) {
    if (parts.empty()) throw ExprError("compose_flat: no parts");
    std::vector<int> offsets = part_offsets(parts, "compose_flat");

    const int sink = 1;
    int pool_width = 0;
    for (const LcwExpression& p : parts) pool_width = std::max(pool_width, p.width());
    std::vector<int> pool;
    for (int j = 0; j < pool_width; ++j) pool.push_back(sink + 1 + j);

    LcwExpression out;
    std::vector<int> used;
    for (size_t i = 0; i < parts.size(); ++i) {
        bool edgeless = true;
        for (const LcwStep& s : parts[i].steps)
            if (s.kind == StepKind::JoinLabels) edgeless = false;
        if (kind == FlatKind::AntiComplete && edgeless) {
            // nothing to join, now or later: the part can live on the sink
            for (const LcwStep& s : parts[i].steps)
                if (s.kind == StepKind::Insert)
                    out.steps.push_back(insert_step(s.a + offsets[i], sink));
            continue;
        }
        append(out, instantiate_part(parts[i], pool, offsets[i], used));
        if (kind == FlatKind::Complete)
            for (int p : used) out.steps.push_back(join_step(p, sink));
        for (int p : used) out.steps.push_back(relabel_step(p, sink));
    }
    return out;
}

LcwExpression reorder_front(const LcwExpression& e, int v) {
    bool found = false;
    for (const LcwStep& s : e.steps)
        if (s.kind == StepKind::Insert && s.a == v) found = true;
    if (!found) throw ExprError("reorder_front: vertex not inserted in expression");

    const int priv = max_label(e) + 1;
    int shadow = 0;  // label v would currently hold in e; 0 = not yet inserted
    LcwExpression out;
    out.steps.push_back(insert_step(v, priv));
    for (const LcwStep& s : e.steps) {
        switch (s.kind) {
            case StepKind::Insert:
                if (s.a == v)
                    shadow = s.b;
                else
                    out.steps.push_back(s);
                break;
            case StepKind::JoinLabels:
                out.steps.push_back(s);
                if (shadow == s.a)
                    out.steps.push_back(join_step(priv, s.b));
                else if (shadow == s.b)
                    out.steps.push_back(join_step(priv, s.a));
                break;
            case StepKind::Relabel:
                out.steps.push_back(s);
                if (shadow == s.a) shadow = s.b;
                break;
        }
    }
    return out;
}

LcwExpression compose_prime(const LcwExpression& eh, const std::vector<LcwExpression>& parts,
                            int x) {
    LabeledGraph h = evaluate(eh);
    int hn = h.graph.n();
    if (static_cast<int>(parts.size()) != hn)
        throw ExprError("compose_prime: need one part per skeleton vertex");
    if (x < 0 || x >= hn) throw ExprError("compose_prime: x out of range");
    std::vector<int> offsets = part_offsets(parts, "compose_prime");

    int wx = parts[static_cast<size_t>(x)].width();
    int second = 0;
    for (int v = 0; v < hn; ++v) {
        int w = parts[static_cast<size_t>(v)].width();
        if (w > wx) throw ExprError("compose_prime: x must maximize part width");
        if (v != x) second = std::max(second, w);
    }

    LcwExpression ef = reorder_front(eh, x);
    const int priv = ef.steps.front().b;  // x's private label
    std::vector<int> ef_labels = labels_in_order(ef);

    std::vector<int> pool2;
    for (int j = 0; j < second; ++j) pool2.push_back(max_label(ef) + 1 + j);

    // the big part reuses values that are idle during its construction:
    // x's private label first, then the other skeleton labels, then pool2
    std::vector<int> pool_x{priv};
    for (int l : ef_labels)
        if (l != priv) pool_x.push_back(l);
    for (int p : pool2) pool_x.push_back(p);
    for (int extra = max_label(ef) + second + 1; static_cast<int>(pool_x.size()) < wx; ++extra)
        pool_x.push_back(extra);

    LcwExpression out;
    std::vector<int> used;
    append(out, instantiate_part(parts[static_cast<size_t>(x)], pool_x,
                                 offsets[static_cast<size_t>(x)], used));
    for (int p : used)
        if (p != priv) out.steps.push_back(relabel_step(p, priv));

    for (size_t i = 1; i < ef.steps.size(); ++i) {
        const LcwStep& s = ef.steps[i];
        if (s.kind != StepKind::Insert) {
            out.steps.push_back(s);
            continue;
        }
        append(out, instantiate_part(parts[static_cast<size_t>(s.a)], pool2,
                                     offsets[static_cast<size_t>(s.a)], used));
        for (int p : used) out.steps.push_back(relabel_step(p, s.b));
    }
    return out;
}

std::string to_text(const LcwExpression& expr) {
    std::ostringstream out;
    for (const LcwStep& s : expr.steps) {
        char c = s.kind == StepKind::Insert ? 'I' : s.kind == StepKind::JoinLabels ? 'J' : 'R';
        out << c << ' ' << s.a << ' ' << s.b << '\n';
    }
    return out.str();
}

LcwExpression parse_expression(std::istream& in) {
    LcwExpression out;
    std::string line;
    while (std::getline(in, line)) {
        if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;  // blank
        int a, b;
        if (!(ls >> a >> b)) throw InputError("expression: expected two integers after op");
        std::string rest;
        if (ls >> rest) throw InputError("expression: trailing tokens");
        if (op == "I")
            out.steps.push_back(insert_step(a, b));
        else if (op == "J")
            out.steps.push_back(join_step(a, b));
        else if (op == "R")
            out.steps.push_back(relabel_step(a, b));
        else
            throw InputError("expression: unknown op '" + op + "'");
    }
    return out;
}

nlohmann::json to_json(const LcwExpression& expr) {
    nlohmann::json arr = nlohmann::json::array();
    for (const LcwStep& s : expr.steps) {
        switch (s.kind) {
            case StepKind::Insert:
                arr.push_back({{"op", "insert"}, {"vertex", s.a}, {"label", s.b}});
                break;
            case StepKind::JoinLabels:
                arr.push_back({{"op", "join"}, {"i", s.a}, {"j", s.b}});
                break;
            case StepKind::Relabel:
                arr.push_back({{"op", "relabel"}, {"from", s.a}, {"to", s.b}});
                break;
        }
    }
    return arr;
}

LcwExpression expression_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("expression json: expected an array");
    LcwExpression out;
    for (const auto& e : j) {
        std::string op = e.at("op");
        if (op == "insert")
            out.steps.push_back(insert_step(e.at("vertex"), e.at("label")));
        else if (op == "join")
            out.steps.push_back(join_step(e.at("i"), e.at("j")));
        else if (op == "relabel")
            out.steps.push_back(relabel_step(e.at("from"), e.at("to")));
        else
            throw InputError("expression json: unknown op '" + op + "'");
    }
    return out;
}

}  // namespace lcw
