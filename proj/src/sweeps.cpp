#include "lcw/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcw/canonical.hpp"
#include "lcw/corpus.hpp"
#include "lcw/exact.hpp"
#include "lcw/expression.hpp"
#include "lcw/modular.hpp"
#include "lcw/obstruction.hpp"
#include "lcw/pipeline.hpp"
#include "lcw/qt.hpp"

namespace lcw {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int resolve_threads(const SweepOptions& opts) {
#ifdef _OPENMP
    return opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
    return 1;
#endif
}

template <typename Fn>
void for_items(long long count, int threads, Fn&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
    for (long long i = 0; i < count; ++i) body(i);
#else
    (void)threads;
    for (long long i = 0; i < count; ++i) body(i);
#endif
}

struct Slot {
    bool ok = true;
    std::string what;
};

void reduce_slots(const std::vector<Slot>& slots, SweepResult& out) {
    out.checked = static_cast<long long>(slots.size());
    nlohmann::json bad = nlohmann::json::array();
    for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].ok) continue;
        ++out.violations;
        if (bad.size() < 5) bad.push_back({{"index", i}, {"what", slots[i].what}});
    }
    out.details = std::move(bad);
}

// pointers into the enumeration cache; no copies of the big levels
std::vector<const Graph*> graphs_through(int max_n, int min_n = 1) {
    std::vector<const Graph*> all;
    for (int n = min_n; n <= max_n; ++n)
        for (const Graph& g : graphs_up_to_iso(n)) all.push_back(&g);
    return all;
}

}  // namespace

SweepResult sweep_oracle_agreement(const SweepOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<const Graph*> items = graphs_through(5);
    std::vector<Slot> slots(items.size());
    std::vector<int> widths(items.size(), 0);
    for_items(static_cast<long long>(items.size()), resolve_threads(opts), [&](long long i) {
        const Graph& g = *items[static_cast<size_t>(i)];
        Slot& s = slots[static_cast<size_t>(i)];
        try {
            ExactResult res = exact_lcw(g, g.n());
            int naive = naive_lcw(g);
            widths[static_cast<size_t>(i)] = res.width;
            if (res.width != naive)
                s = {false, to_graph6(g) + ": exact " + std::to_string(res.width) +
                                " != naive " + std::to_string(naive)};
            else if (!verify(res.witness, g) || res.witness.width() != res.width)
                s = {false, to_graph6(g) + ": witness mismatch"};
        } catch (const std::exception& e) {
            s = {false, to_graph6(g) + ": " + e.what()};
        }
    });
    SweepResult out;
    out.name = "oracle-agreement";
    reduce_slots(slots, out);
    std::ostringstream note;
    note << "n<=5 representatives; max_lcw=" << *std::max_element(widths.begin(), widths.end());
    out.notes = note.str();
    out.seconds = seconds_since(t0);
    return out;
}

SweepResult sweep_degenerate_facts(const SweepOptions& opts, int max_n) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<const Graph*> items = graphs_through(max_n);
    std::vector<Slot> slots(items.size());
    std::vector<unsigned char> q2f(items.size(), 0), p3f(items.size(), 0);
    Graph q2 = gen_Q(2);
    Graph p3 = gen_coQ(2);
    for_items(static_cast<long long>(items.size()), resolve_threads(opts), [&](long long i) {
        const Graph& g = *items[static_cast<size_t>(i)];
        Slot& s = slots[static_cast<size_t>(i)];
        try {
            bool no_q2 = !induced_embed(q2, g);
            bool no_p3 = !induced_embed(p3, g);
            q2f[static_cast<size_t>(i)] = no_q2;
            p3f[static_cast<size_t>(i)] = no_p3;
            if (!no_q2 && !no_p3) return;
            int w = exact_lcw(g, g.n()).width;
            std::string why;
            if (no_q2 && !(is_complete_multipartite(g) && w <= 2))
                why = "multipartite fact fails";
            if (no_p3 && !(is_disjoint_cliques(g) && w <= 3))
                why += std::string(why.empty() ? "" : "; ") + "clique-union fact fails";
            if (!why.empty()) s = {false, to_graph6(g) + ": " + why};
        } catch (const std::exception& e) {
            s = {false, to_graph6(g) + ": " + e.what()};
        }
    });
    SweepResult out;
    out.name = "degenerate-facts";
    reduce_slots(slots, out);
    long long nq = 0, np = 0;
    for (unsigned char f : q2f) nq += f;
    for (unsigned char f : p3f) np += f;
    std::ostringstream note;
    note << "n<=" << max_n << "; q2_free=" << nq << " p3_free=" << np;
    out.notes = note.str();
    out.seconds = seconds_since(t0);
    return out;
}

namespace {

Slot composition_trial(int prop, std::uint64_t item_seed) {
    Rng rng(item_seed);
    try {
        switch (prop) {
            case 0: {  // inflation over an arbitrary skeleton expression
                int h = rng.uniform(1, 4);
                LcwExpression eh = rand_expression(h, rng.uniform(1, 3), rng);
                std::vector<LcwExpression> parts;
                std::vector<Graph> part_graphs;
                int maxw = 0;
                for (int i = 0; i < h; ++i) {
                    parts.push_back(rand_expression(rng.uniform(1, 4), rng.uniform(1, 3), rng));
                    part_graphs.push_back(evaluate(parts.back()).graph);
                    maxw = std::max(maxw, parts.back().width());
                }
                Graph target = inflate(evaluate(eh).graph, part_graphs).graph;
                LcwExpression out = compose_inflation(eh, parts);
                if (!verify(out, target)) return {false, "inflation: wrong graph"};
                if (out.width() > eh.width() + maxw) return {false, "inflation: width bound"};
                return {};
            }
            case 1: {  // join / disjoint union with one reserved label
                int k = rng.uniform(1, 4);
                bool complete = rng.chance(0.5);
                std::vector<LcwExpression> parts;
                std::vector<Graph> part_graphs;
                int maxw = 0;
                for (int i = 0; i < k; ++i) {
                    parts.push_back(rand_expression(rng.uniform(1, 4), rng.uniform(1, 3), rng));
                    part_graphs.push_back(evaluate(parts.back()).graph);
                    maxw = std::max(maxw, parts.back().width());
                }
                Graph target = part_graphs[0];
                for (size_t i = 1; i < part_graphs.size(); ++i)
                    target = complete ? join(target, part_graphs[i])
                                      : disjoint_union(target, part_graphs[i]);
                LcwExpression out = compose_flat(
                    complete ? FlatKind::Complete : FlatKind::AntiComplete, parts);
                if (!verify(out, target)) return {false, "flat: wrong graph"};
                if (out.width() > 1 + maxw) return {false, "flat: width bound"};
                return {};
            }
            case 2: {  // pull one vertex to the front
                int n = rng.uniform(1, 6);
                LcwExpression e = rand_expression(n, rng.uniform(1, 4), rng);
                int v = rng.uniform(0, n - 1);
                LcwExpression out = reorder_front(e, v);
                if (!verify(out, evaluate(e).graph)) return {false, "reorder: wrong graph"};
                if (out.width() > e.width() + 1) return {false, "reorder: width bound"};
                if (out.steps.front().kind != StepKind::Insert || out.steps.front().a != v)
                    return {false, "reorder: vertex not first"};
                LabeledGraph lg = evaluate(out);
                if (lg.labels[static_cast<size_t>(v)] != out.steps.front().b)
                    return {false, "reorder: vertex lost its private label"};
                return {};
            }
            default: {  // widest part built first, labels reused
                int h = rng.uniform(2, 4);
                LcwExpression eh = rand_expression(h, rng.uniform(1, 3), rng);
                std::vector<LcwExpression> parts;
                std::vector<Graph> part_graphs;
                for (int i = 0; i < h; ++i) {
                    parts.push_back(rand_expression(rng.uniform(1, 3), rng.uniform(1, 3), rng));
                    part_graphs.push_back(evaluate(parts.back()).graph);
                }
                size_t x = 0;
                for (size_t i = 1; i < parts.size(); ++i)
                    if (parts[i].width() > parts[x].width()) x = i;
                int second = 0;
                for (size_t i = 0; i < parts.size(); ++i)
                    if (i != x) second = std::max(second, parts[i].width());
                Graph target = inflate(evaluate(eh).graph, part_graphs).graph;
                LcwExpression out = compose_prime(eh, parts, static_cast<int>(x));
                if (!verify(out, target)) return {false, "prime: wrong graph"};
                if (out.width() > std::max(parts[x].width(), eh.width() + 1 + second))
                    return {false, "prime: width bound"};
                return {};
            }
        }
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
}

}  // namespace

SweepResult sweep_composition_audits(const SweepOptions& opts, int trials_each) {
    auto t0 = std::chrono::steady_clock::now();
    long long total = 4LL * trials_each;
    std::vector<Slot> slots(static_cast<size_t>(total));
    for_items(total, resolve_threads(opts), [&](long long i) {
        slots[static_cast<size_t>(i)] = composition_trial(
            static_cast<int>(i / trials_each), mix(opts.seed, static_cast<std::uint64_t>(i)));
    });
    SweepResult out;
    out.name = "composition-audits";
    reduce_slots(slots, out);
    std::ostringstream note;
    note << "trials_each=" << trials_each << " transforms=4";
    out.notes = note.str();
    out.seconds = seconds_since(t0);
    return out;
}

SweepResult sweep_contrapositive(const SweepOptions& opts, int max_n) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<const Graph*> items = graphs_through(max_n);
    std::vector<Slot> slots(items.size());
    std::vector<int> lcws(items.size(), 0), bounds(items.size(), 0);
    PrimeOracle oracle(12);
    for_items(static_cast<long long>(items.size()), resolve_threads(opts), [&](long long i) {
        const Graph& g = *items[static_cast<size_t>(i)];
        Slot& s = slots[static_cast<size_t>(i)];
        try {
            TheoremReport rep = theorem_check(g, oracle);
            lcws[static_cast<size_t>(i)] = rep.lcw_value;
            bounds[static_cast<size_t>(i)] = rep.bound;
            if (!rep.exact)
                s = {false, to_graph6(g) + ": lcw not exact"};
            else if (!rep.holds)
                s = {false, to_graph6(g) + ": lcw " + std::to_string(rep.lcw_value) +
                                " >= bound " + std::to_string(rep.bound)};
        } catch (const std::exception& e) {
            s = {false, to_graph6(g) + ": " + e.what()};
        }
    });
    SweepResult out;
    out.name = "contrapositive";
    reduce_slots(slots, out);
    std::ostringstream note;
    note << "n<=" << max_n << "; max_lcw=" << *std::max_element(lcws.begin(), lcws.end())
         << " max_bound=" << *std::max_element(bounds.begin(), bounds.end());
    out.notes = note.str();
    out.seconds = seconds_since(t0);
    return out;
}

SweepResult sweep_universal_embedding(const SweepOptions& opts, int max_n) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<const Graph*> items = graphs_through(max_n);
    std::vector<Slot> slots(items.size());
    std::vector<unsigned char> qt(items.size(), 0);
    for_items(static_cast<long long>(items.size()), resolve_threads(opts), [&](long long i) {
        const Graph& g = *items[static_cast<size_t>(i)];
        Slot& s = slots[static_cast<size_t>(i)];
        try {
            bool scan = is_quasi_threshold(g);
            if (scan != qt_recognize_by_construction(g)) {
                s = {false, to_graph6(g) + ": recognizers disagree"};
                return;
            }
            if (scan) {
                qt[static_cast<size_t>(i)] = 1;
                UniversalEmbedding ue = universal_embed(g);
                if (ue.t > std::max(1, g.n()))
                    s = {false, to_graph6(g) + ": t=" + std::to_string(ue.t) + " exceeds n"};
                else if (!universal_embedding_valid(g, ue))
                    s = {false, to_graph6(g) + ": embedding invalid"};
                return;
            }
            try {
                universal_embed(g);
                s = {false, to_graph6(g) + ": embed accepted a non-QT graph"};
            } catch (const NotQuasiThreshold& rej) {
                VertexSet quad = 0;
                for (int v : rej.quad.vertices) quad |= bit(v);
                Graph sub = induced_subgraph(g, quad);
                Graph want = rej.quad.is_c4 ? cycle_graph(4) : path_graph(4);
                if (canonical_code(sub) != canonical_code(want))
                    s = {false, to_graph6(g) + ": witness quad is not the claimed pattern"};
            }
        } catch (const std::exception& e) {
            s = {false, to_graph6(g) + ": " + e.what()};
        }
    });
    SweepResult out;
    out.name = "universal-embedding";
    reduce_slots(slots, out);
    long long nqt = 0;
    for (unsigned char f : qt) nqt += f;
    std::ostringstream note;
    note << "n<=" << max_n << "; qt_graphs=" << nqt;
    out.notes = note.str();
    out.seconds = seconds_since(t0);
    return out;
}

SweepResult sweep_qt_growth(const SweepOptions& opts, int max_t) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Slot> slots(static_cast<size_t>(max_t));
    std::vector<int> w(static_cast<size_t>(max_t), -1);
    for_items(max_t, resolve_threads(opts), [&](long long i) {
        int t = static_cast<int>(i) + 1;
        try {
            w[static_cast<size_t>(i)] = exact_lcw(gen_Q(t), 12).width;
        } catch (const std::exception& e) {
            slots[static_cast<size_t>(i)] = {false, std::string("Q_") + std::to_string(t) +
                                                        ": " + e.what()};
        }
    });
    SweepResult out;
    out.name = "qt-growth";
    reduce_slots(slots, out);
    if (out.violations == 0) {
        if (w[0] != 1) {
            ++out.violations;
            out.details.push_back({{"what", "lcw(Q_1) != 1"}});
        }
        for (size_t i = 1; i < w.size(); ++i)
            if (w[i] < w[i - 1]) {
                ++out.violations;
                out.details.push_back({{"what", "lcw decreases at t=" + std::to_string(i + 1)}});
            }
        if (max_t >= 4 && w[3] <= w[1]) {
            ++out.violations;
            out.details.push_back({{"what", "lcw(Q_4) <= lcw(Q_2)"}});
        }
    }
    std::ostringstream note;
    note << "w=[";
    for (size_t i = 0; i < w.size(); ++i) note << (i ? "," : "") << w[i];
    note << "]";
    out.notes = note.str();
    out.seconds = seconds_since(t0);
    return out;
}

namespace {

std::vector<VertexSet> brute_maximal_proper_strong(const Graph& g) {
    std::vector<VertexSet> mods = all_modules_brute(g);
    std::vector<VertexSet> strong;
    for (VertexSet m : mods) {
        if (m == g.vertices()) continue;
        bool overlapped = false;
        for (VertexSet o : mods) {
            VertexSet inter = m & o;
            if (inter != 0 && inter != m && inter != o) overlapped = true;
        }
        if (!overlapped) strong.push_back(m);
    }
    std::vector<VertexSet> maximal;
    for (VertexSet m : strong) {
        bool contained = false;
        for (VertexSet o : strong)
            if (o != m && (m & o) == m) contained = true;
        if (!contained) maximal.push_back(m);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](VertexSet a, VertexSet b) { return lowest_vertex(a) < lowest_vertex(b); });
    return maximal;
}

std::string check_decomposition(const Graph& g, const SkeletonDecomposition& d) {
    if (d.modules.size() < 2) return "fewer than two modules";
    if (static_cast<int>(d.modules.size()) != d.skeleton.n()) return "skeleton size mismatch";
    VertexSet seen = 0;
    for (VertexSet m : d.modules) {
        if (m == 0 || (seen & m)) return "blocks do not partition";
        seen |= m;
        if (!is_module(g, m)) return "block fails the module definition";
    }
    if (seen != g.vertices()) return "blocks miss vertices";
    for (int v = 0; v < g.n(); ++v) {
        int b = d.block_of[static_cast<size_t>(v)];
        if (b < 0 || b >= static_cast<int>(d.modules.size()) ||
            !(d.modules[static_cast<size_t>(b)] & bit(v)))
            return "block_of inconsistent";
    }
    std::vector<Graph> parts;
    std::vector<int> pi;
    for (VertexSet m : d.modules) {
        parts.push_back(induced_subgraph(g, m));
        for (int v : set_to_vector(m)) pi.push_back(v);
    }
    Graph recon = inflate(d.skeleton, parts).graph;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (recon.adj(i, j) !=
                g.adj(pi[static_cast<size_t>(i)], pi[static_cast<size_t>(j)]))
                return "reconstruction differs from input";
    if (d.kind == SkeletonKind::AntiComplete && d.modules != components(g))
        return "blocks are not the components";
    if (d.kind == SkeletonKind::Complete && d.modules != co_components(g))
        return "blocks are not the co-components";
    if (d.kind == SkeletonKind::Prime) {
        if (d.skeleton.n() < 4) return "prime skeleton below four vertices";
        if (!is_prime(d.skeleton)) return "prime skeleton is not prime";
    }
    if (g.n() <= 9) {
        if (is_prime(g) != is_prime_brute(g)) return "primality check disagreement";
        if (brute_maximal_proper_strong(g) != d.modules)
            return "strong-module partition disagrees with brute force";
    }
    return "";
}

}  // namespace

SweepResult sweep_decomposition(const SweepOptions& opts, int random_trials,
                                int exhaustive_max_n) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<const Graph*> ex = graphs_through(exhaustive_max_n, 2);
    long long total = static_cast<long long>(ex.size()) + random_trials;
    std::vector<Slot> slots(static_cast<size_t>(total));
    std::vector<unsigned char> kinds(static_cast<size_t>(total), 255);
    for_items(total, resolve_threads(opts), [&](long long i) {
        Slot& s = slots[static_cast<size_t>(i)];
        try {
            Graph g(1);
            if (i < static_cast<long long>(ex.size())) {
                g = *ex[static_cast<size_t>(i)];
            } else {
                Rng rng(mix(opts.seed, static_cast<std::uint64_t>(i)));
                int n = rng.uniform(2, 20);
                g = gnp(n, rng.uniform(1, 9) / 10.0, rng);
            }
            SkeletonDecomposition d = decompose_one_stage(g);
            kinds[static_cast<size_t>(i)] = static_cast<unsigned char>(d.kind);
            std::string why = check_decomposition(g, d);
            if (!why.empty()) s = {false, to_graph6(g) + ": " + why};
        } catch (const std::exception& e) {
            s = {false, std::string("item ") + std::to_string(i) + ": " + e.what()};
        }
    });
    SweepResult out;
    out.name = "decomposition";
    reduce_slots(slots, out);
    long long nc = 0, na = 0, np = 0;
    for (unsigned char k : kinds) {
        if (k == static_cast<unsigned char>(SkeletonKind::Complete)) ++nc;
        if (k == static_cast<unsigned char>(SkeletonKind::AntiComplete)) ++na;
        if (k == static_cast<unsigned char>(SkeletonKind::Prime)) ++np;
    }
    std::ostringstream note;
    note << "exhaustive n<=" << exhaustive_max_n << " plus " << random_trials
         << " random; complete=" << nc << " anti=" << na << " prime=" << np;
    out.notes = note.str();
    out.seconds = seconds_since(t0);
    return out;
}

namespace {

std::string check_audit(const nlohmann::json& a) {
    std::string kind = a.at("kind").get<std::string>();
    int width = a.at("width").get<int>();
    int bound = a.at("bound").get<int>();
    if (width > bound) return "width exceeds bound in " + kind + " node";
    if (kind == "leaf") return bound == 1 ? "" : "leaf bound is not 1";
    if (kind == "prime_leaf") return bound == width ? "" : "prime_leaf bound mismatch";
    const nlohmann::json& pw = a.at("part_widths");
    const nlohmann::json& kids = a.at("children");
    if (pw.size() != kids.size() || pw.empty()) return "part bookkeeping broken";
    int maxw = 0;
    for (size_t i = 0; i < pw.size(); ++i) {
        if (kids[i].at("width").get<int>() != pw[i].get<int>())
            return "child width disagrees with part_widths";
        maxw = std::max(maxw, pw[i].get<int>());
    }
    if (kind == "complete" || kind == "anti_complete") {
        if (bound != 1 + maxw) return "flat bound formula violated";
    } else if (kind == "prime") {
        size_t x = a.at("x").get<size_t>();
        if (x >= pw.size()) return "prime x out of range";
        int second = 0;
        for (size_t i = 0; i < pw.size(); ++i)
            if (i != x) second = std::max(second, pw[i].get<int>());
        int want = std::max(pw[x].get<int>(), a.at("skeleton_width").get<int>() + 1 + second);
        if (bound != want) return "prime bound formula violated";
    } else {
        return "unknown audit kind " + kind;
    }
    for (const nlohmann::json& k : kids) {
        std::string why = check_audit(k);
        if (!why.empty()) return why;
    }
    return "";
}

}  // namespace

SweepResult sweep_builder(const SweepOptions& opts, int random_trials, int exact_max_n) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<const Graph*> ex = graphs_through(exact_max_n);
    long long total = static_cast<long long>(ex.size()) + random_trials;
    std::vector<Slot> slots(static_cast<size_t>(total));
    std::vector<int> slack(static_cast<size_t>(total), 0);
    PrimeOracle oracle(12);
    for_items(total, resolve_threads(opts), [&](long long i) {
        Slot& s = slots[static_cast<size_t>(i)];
        try {
            Graph g(1);
            bool exhaustive = i < static_cast<long long>(ex.size());
            if (exhaustive) {
                g = *ex[static_cast<size_t>(i)];
            } else {
                Rng rng(mix(opts.seed, static_cast<std::uint64_t>(i)));
                g = rand_modular_graph(rng.uniform(1, 20), rng);
            }
            BuildResult br = build_expression(g, oracle);  // verifies internally
            std::string why = check_audit(br.audit);
            if (!why.empty()) {
                s = {false, to_graph6(g) + ": " + why};
                return;
            }
            if (exhaustive) {
                int exact = oracle.lcw_of(g);
                if (br.width < exact) {
                    s = {false, to_graph6(g) + ": width " + std::to_string(br.width) +
                                    " below exact " + std::to_string(exact)};
                    return;
                }
                slack[static_cast<size_t>(i)] = br.width - exact;
            }
        } catch (const std::exception& e) {
            s = {false, std::string("item ") + std::to_string(i) + ": " + e.what()};
        }
    });
    SweepResult out;
    out.name = "builder";
    reduce_slots(slots, out);
    std::ostringstream note;
    note << "exhaustive n<=" << exact_max_n << " plus " << random_trials
         << " random; max_slack=" << *std::max_element(slack.begin(), slack.end());
    out.notes = note.str();
    out.seconds = seconds_since(t0);
    return out;
}

std::vector<SweepResult> run_all_sweeps(const SweepOptions& opts) {
    return {sweep_oracle_agreement(opts),    sweep_degenerate_facts(opts),
            sweep_composition_audits(opts),  sweep_contrapositive(opts),
            sweep_universal_embedding(opts), sweep_qt_growth(opts),
            sweep_decomposition(opts),       sweep_builder(opts)};
}

}  // namespace lcw
