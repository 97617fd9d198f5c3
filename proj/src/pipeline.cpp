#include "lcw/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "lcw/canonical.hpp"
#include "lcw/modular.hpp"
#include "lcw/obstruction.hpp"
#include "lcw/qt.hpp"

namespace lcw {

PrimeOracle::PrimeOracle(int budget) : budget_(budget) {
    if (budget < 1) throw std::invalid_argument("PrimeOracle: budget >= 1 required");
}

PrimeOracle::PrimeOracle(int budget, const std::string& cache_path) : PrimeOracle(budget) {
    cache_path_ = cache_path;
    std::ifstream in(cache_path_);
    std::string line;
    while (std::getline(in, line)) {
        size_t tab = line.find('\t');
        if (tab == std::string::npos) continue;
        try {
            Graph g = from_graph6(line.substr(0, tab));
            LcwExpression e = expression_from_json(nlohmann::json::parse(line.substr(tab + 1)));
            if (verify(e, g)) memo_.emplace(line.substr(0, tab), std::move(e));
        } catch (...) {
            // a corrupt line costs a recomputation, nothing else
        }
    }
}

LcwExpression PrimeOracle::expression_for(const Graph& g) {
    CanonicalForm cf = canonical_form(g);
    std::string key = to_graph6(cf.graph);
    LcwExpression canon_expr;
    bool have = false;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            canon_expr = it->second;
            have = true;
        }
    }
    if (!have) {
        canon_expr = exact_lcw(cf.graph, budget_).witness;
        std::lock_guard<std::mutex> lock(mu_);
        if (memo_.emplace(key, canon_expr).second && !cache_path_.empty()) {
            std::ofstream out(cache_path_, std::ios::app);
            out << key << '\t' << to_json(canon_expr).dump() << '\n';
        }
    }
    LcwExpression translated = remap_vertices(canon_expr, cf.order);
    if (!verify(translated, g))
        throw std::logic_error("PrimeOracle: translated expression failed verification");
    return translated;
}

int PrimeOracle::lcw_of(const Graph& g) { return expression_for(g).width(); }

namespace {

BuildResult build_rec(const Graph& g, PrimeOracle& oracle) {
    if (g.n() == 1) {
        LcwExpression e;
        e.steps.push_back(insert_step(0, 1));
        return {e, 1, {{"kind", "leaf"}, {"n", 1}, {"width", 1}, {"bound", 1}}};
    }
    SkeletonDecomposition d = decompose_one_stage(g);
    bool all_single = true;
    for (VertexSet m : d.modules)
        if (popcount(m) != 1) all_single = false;
    if (d.kind == SkeletonKind::Prime && all_single) {
        // g is itself prime; composing over singletons would waste two labels
        LcwExpression e = oracle.expression_for(g);
        int w = e.width();
        return {e, w, {{"kind", "prime_leaf"}, {"n", g.n()}, {"width", w}, {"bound", w}}};
    }

    std::vector<BuildResult> kids;
    std::vector<LcwExpression> part_exprs;
    nlohmann::json part_widths = nlohmann::json::array();
    nlohmann::json children = nlohmann::json::array();
    int max_w = 0;
    for (VertexSet mset : d.modules) {
        kids.push_back(build_rec(induced_subgraph(g, mset), oracle));
        part_exprs.push_back(kids.back().expr);
        part_widths.push_back(kids.back().width);
        children.push_back(kids.back().audit);
        max_w = std::max(max_w, kids.back().width);
    }

    LcwExpression composed;
    nlohmann::json audit;
    int bound;
    if (d.kind == SkeletonKind::Prime) {
        LcwExpression eh = oracle.expression_for(d.skeleton);
        size_t x = 0;
        for (size_t i = 1; i < kids.size(); ++i)
            if (kids[i].width > kids[x].width) x = i;
        int second = 0;
        for (size_t i = 0; i < kids.size(); ++i)
            if (i != x) second = std::max(second, kids[i].width);
        composed = compose_prime(eh, part_exprs, static_cast<int>(x));
        bound = std::max(kids[x].width, eh.width() + 1 + second);
        audit = {{"kind", "prime"},
                 {"n", g.n()},
                 {"skeleton_width", eh.width()},
                 {"x", x},
                 {"bound", bound}};
    } else {
        bool complete = d.kind == SkeletonKind::Complete;
        composed = compose_flat(complete ? FlatKind::Complete : FlatKind::AntiComplete,
                                part_exprs);
        bound = 1 + max_w;
        audit = {{"kind", complete ? "complete" : "anti_complete"},
                 {"n", g.n()},
                 {"bound", bound}};
    }

    // composed ids are block-contiguous in module order; route to g's ids
    std::vector<int> new_id;
    for (VertexSet mset : d.modules)
        for (int v : set_to_vector(mset)) new_id.push_back(v);
    LcwExpression e = remap_vertices(composed, new_id);
    int w = e.width();
    audit["part_widths"] = part_widths;
    audit["children"] = children;
    audit["width"] = w;
    return {std::move(e), w, std::move(audit)};
}

}  // namespace

BuildResult build_expression(const Graph& g, PrimeOracle& oracle) {
    if (g.n() < 1) throw std::invalid_argument("build_expression: need n >= 1");
    BuildResult r = build_rec(g, oracle);
    if (!verify(r.expr, g)) throw std::logic_error("build_expression: output failed verification");
    return r;
}

PrimeProfile prime_profile(const Graph& g, int size_cap, PrimeOracle& oracle) {
    if (g.n() > 15) throw std::invalid_argument("prime_profile: n > 15 not supported");
    PrimeProfile out;
    if (size_cap >= 2) {
        bool nonedge = false;
        for (int u = 0; u < g.n() && !nonedge; ++u)
            for (int v = u + 1; v < g.n() && !nonedge; ++v)
                if (!g.adj(u, v)) nonedge = true;
        if (nonedge) {
            out.m = 1;
            out.witness = empty_graph(2);
        }
    }
    for (VertexSet s = 1; s <= g.vertices(); ++s) {
        int sz = popcount(s);
        if (sz < 2 || sz > size_cap) continue;
        Graph h = induced_subgraph(g, s);
        if (!is_connected(h) || !is_prime(h)) continue;
        int w = oracle.lcw_of(h);
        if (w > out.m) {
            out.m = w;
            out.witness = std::move(h);
        }
    }
    return out;
}

TheoremReport theorem_check(const Graph& g, PrimeOracle& oracle, int size_cap) {
    if (g.n() < 1) throw std::invalid_argument("theorem_check: need n >= 1");
    if (size_cap < 0 || size_cap > g.n()) size_cap = g.n();
    PrimeProfile prof = prime_profile(g, size_cap, oracle);
    TheoremReport r;
    r.m = prof.m;
    r.t = qt_avoidance_index(g);
    r.s = coqt_avoidance_index(g);
    r.bound = (r.m + 2) * (r.t + r.s);
    r.max_prime = prof.witness;
    try {
        r.lcw_value = oracle.lcw_of(g);  // memoized; exact whenever it returns
        r.exact = true;
    } catch (const BudgetExceeded&) {
        r.lcw_value = build_expression(g, oracle).width;
        r.exact = false;
    }
    r.holds = r.lcw_value < r.bound;
    return r;
}

nlohmann::json to_json(const TheoremReport& r) {
    nlohmann::json j{{"m", r.m},           {"t", r.t},
                     {"s", r.s},           {"bound", r.bound},
                     {"lcw", r.lcw_value}, {"exact", r.exact},
                     {"holds", r.holds},   {"missing_qt", r.t},
                     {"missing_coqt", r.s}};
    j["max_prime"] = r.max_prime ? nlohmann::json(to_graph6(*r.max_prime)) : nlohmann::json();
    return j;
}

bool is_disjoint_cliques(const Graph& g) {
    for (VertexSet comp : components(g)) {
        std::vector<int> vs = set_to_vector(comp);
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (!g.adj(vs[i], vs[j])) return false;
    }
    return true;
}

bool is_complete_multipartite(const Graph& g) { return is_disjoint_cliques(complement(g)); }

DegenerateReport degenerate_facts_check(int max_n) {
    if (max_n < 1 || max_n > 9)
        throw std::invalid_argument("degenerate_facts_check: max_n out of range");
    DegenerateReport rep;
    Graph q2 = gen_Q(2);
    Graph p3 = gen_coQ(2);
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : graphs_up_to_iso(n)) {
            ++rep.total;
            bool no_q2 = !induced_embed(q2, g);
            bool no_p3 = !induced_embed(p3, g);
            if (!no_q2 && !no_p3) continue;
            int width = exact_lcw(g, g.n()).width;
            if (no_q2) {
                ++rep.q2_free;
                if (!is_complete_multipartite(g) || width > 2) {
                    ++rep.violations;
                    rep.failing.push_back(to_graph6(g));
                }
            }
            if (no_p3) {
                ++rep.p3_free;
                if (!is_disjoint_cliques(g) || width > 3) {
                    ++rep.violations;
                    rep.failing.push_back(to_graph6(g));
                }
            }
        }
    return rep;
}

}  // namespace lcw
