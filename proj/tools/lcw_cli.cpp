#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcw/canonical.hpp"
#include "lcw/corpus.hpp"
#include "lcw/exact.hpp"
#include "lcw/expression.hpp"
#include "lcw/graph.hpp"
#include "lcw/modular.hpp"
#include "lcw/obstruction.hpp"
#include "lcw/pipeline.hpp"
#include "lcw/qt.hpp"
#include "lcw/sweeps.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

lcw::Graph read_graph(std::istream& in, const std::string& format) {
    if (format == "edgelist") return lcw::parse_edge_list(in);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) return lcw::from_graph6(line);
    }
    throw lcw::InputError("no graph on input");
}

lcw::Graph graph_from_arg(const std::string& arg) { return lcw::from_graph6(arg); }

void print_expression(std::ostream& out, const lcw::LcwExpression& e) {
    out << lcw::to_text(e);
}

struct SweepSpec {
    std::string name;
    lcw::SweepResult (*run)(const lcw::SweepOptions&, bool full);
};

lcw::SweepResult run_named_sweep(const std::string& name, const lcw::SweepOptions& opts,
                                 bool full) {
    if (name == "oracle-agreement") return lcw::sweep_oracle_agreement(opts);
    if (name == "degenerate-facts") return lcw::sweep_degenerate_facts(opts);
    if (name == "composition-audits") return lcw::sweep_composition_audits(opts);
    if (name == "contrapositive") return lcw::sweep_contrapositive(opts, full ? 8 : 7);
    if (name == "universal-embedding") return lcw::sweep_universal_embedding(opts, full ? 8 : 7);
    if (name == "qt-growth") return lcw::sweep_qt_growth(opts);
    if (name == "decomposition")
        return lcw::sweep_decomposition(opts, full ? 10000 : 2000, full ? 9 : 8);
    if (name == "builder") return lcw::sweep_builder(opts, full ? 10000 : 2000, full ? 8 : 7);
    throw lcw::InputError("unknown sweep: " + name);
}

const std::vector<std::string> kAllSweeps = {
    "oracle-agreement", "degenerate-facts",    "composition-audits", "contrapositive",
    "universal-embedding", "qt-growth",        "decomposition",      "builder"};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear clique-width toolkit"};
    app.require_subcommand(1);

    std::string format = "graph6";
    bool as_json = false;
    app.add_option("--format", format, "input graph format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    app.add_flag("--json", as_json, "JSON output where applicable");
    app.fallthrough();  // let --format/--json sit after the subcommand too

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph as graph6");
    std::string gen_family;
    int gen_index = 1;
    gen->add_option("family", gen_family, "qt | coqt | path | cycle | complete | empty")
        ->required()
        ->check(CLI::IsMember({"qt", "coqt", "path", "cycle", "complete", "empty"}));
    gen->add_option("index", gen_index, "t / s / vertex count")->required();

    // decompose
    auto* dec = app.add_subcommand("decompose", "one-stage modular decomposition (JSON)");

    // lcw-exact
    auto* lex = app.add_subcommand("lcw-exact", "exact linear clique-width with witness");
    int budget = 12;
    lex->add_option("--budget", budget, "give up beyond this many labels");

    // build-expr
    auto* bld = app.add_subcommand("build-expr", "synthesize an expression via decomposition");
    int bld_budget = 12;
    std::string cache_path;
    bld->add_option("--budget", bld_budget, "prime-oracle label budget");
    bld->add_option("--cache", cache_path, "append-only prime-oracle cache file");

    // verify-expr
    auto* ver = app.add_subcommand("verify-expr", "check an expression against a graph");
    std::string ver_graph;
    ver->add_option("graph", ver_graph, "target graph as graph6")->required();

    // embed
    auto* emb = app.add_subcommand("embed", "find an induced copy of pattern in host");
    std::string emb_pattern, emb_host;
    emb->add_option("pattern", emb_pattern, "pattern graph6")->required();
    emb->add_option("host", emb_host, "host graph6")->required();

    // avoid
    auto* avd = app.add_subcommand("avoid", "first missing universal indices t and s");

    // theorem-check
    auto* thm = app.add_subcommand("theorem-check", "per-graph bound report (JSON)");
    int thm_budget = 12;
    int size_cap = -1;
    std::string thm_cache;
    thm->add_option("--budget", thm_budget, "prime-oracle label budget");
    thm->add_option("--size-cap", size_cap, "cap on profiled induced subgraph size");
    thm->add_option("--cache", thm_cache, "append-only prime-oracle cache file");

    // sweep
    auto* swp = app.add_subcommand("sweep", "run corpus acceptance sweeps");
    std::vector<std::string> sweep_names;
    std::uint64_t seed = 1;
    bool deterministic = false;
    bool full = false;
    int threads = 0;
    swp->add_option("names", sweep_names, "subset of sweeps (default: all)");
    swp->add_option("--seed", seed, "seed for randomized corpora");
    swp->add_flag("--deterministic", deterministic,
                  "single-threaded, timing omitted: byte-identical output");
    swp->add_flag("--full", full, "acceptance-scale parameters (slow)");
    swp->add_option("--threads", threads, "worker threads (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*gen) {
            lcw::Graph g = [&] {
                if (gen_family == "qt") return lcw::gen_Q(gen_index);
                if (gen_family == "coqt") return lcw::gen_coQ(gen_index);
                if (gen_family == "path") return lcw::path_graph(gen_index);
                if (gen_family == "cycle") return lcw::cycle_graph(gen_index);
                if (gen_family == "complete") return lcw::complete_graph(gen_index);
                return lcw::empty_graph(gen_index);
            }();
            std::cout << lcw::to_graph6(g) << "\n";
            return kOk;
        }

        if (*dec) {
            lcw::Graph g = read_graph(std::cin, format);
            std::cout << lcw::to_json(lcw::decompose_one_stage(g)).dump(as_json ? -1 : 2)
                      << "\n";
            return kOk;
        }

        if (*lex) {
            lcw::Graph g = read_graph(std::cin, format);
            lcw::ExactResult res = lcw::exact_lcw(g, budget);
            if (as_json) {
                nlohmann::json j{{"width", res.width},
                                 {"expression", lcw::to_json(res.witness)}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "# lcw " << res.width << "\n";
                print_expression(std::cout, res.witness);
            }
            return kOk;
        }

        if (*bld) {
            lcw::Graph g = read_graph(std::cin, format);
            lcw::PrimeOracle oracle =
                cache_path.empty() ? lcw::PrimeOracle(bld_budget)
                                   : lcw::PrimeOracle(bld_budget, cache_path);
            lcw::BuildResult res = lcw::build_expression(g, oracle);
            lcw::LcwExpression tight = lcw::compact_labels(res.expr);
            if (as_json) {
                nlohmann::json j{{"width", tight.width()},
                                 {"expression", lcw::to_json(tight)},
                                 {"audit", res.audit}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "# width " << tight.width() << "\n";
                print_expression(std::cout, tight);
            }
            return kOk;
        }

        if (*ver) {
            lcw::Graph g = graph_from_arg(ver_graph);
            lcw::LcwExpression e = lcw::parse_expression(std::cin);
            bool ok = lcw::verify(e, g);
            if (as_json)
                std::cout << nlohmann::json{{"verified", ok}}.dump() << "\n";
            else
                std::cout << (ok ? "verified" : "mismatch") << "\n";
            return ok ? kOk : kNegative;
        }

        if (*emb) {
            lcw::Graph pattern = graph_from_arg(emb_pattern);
            lcw::Graph host = graph_from_arg(emb_host);
            auto found = lcw::induced_embed(pattern, host);
            if (!found) {
                if (as_json)
                    std::cout << nlohmann::json{{"absent", true}}.dump() << "\n";
                else
                    std::cout << "absent\n";
                return kNegative;
            }
            if (as_json) {
                std::cout << lcw::embedding_json(pattern, host, *found).dump() << "\n";
            } else {
                for (size_t i = 0; i < found->map.size(); ++i)
                    std::cout << (i ? " " : "") << found->map[i];
                std::cout << "\n";
            }
            return kOk;
        }

        if (*avd) {
            lcw::Graph g = read_graph(std::cin, format);
            int t = lcw::qt_avoidance_index(g);
            int s = lcw::coqt_avoidance_index(g);
            if (as_json)
                std::cout << nlohmann::json{{"t", t}, {"s", s}}.dump() << "\n";
            else
                std::cout << t << " " << s << "\n";
            return kOk;
        }

        if (*thm) {
            lcw::Graph g = read_graph(std::cin, format);
            lcw::PrimeOracle oracle = thm_cache.empty()
                                          ? lcw::PrimeOracle(thm_budget)
                                          : lcw::PrimeOracle(thm_budget, thm_cache);
            lcw::TheoremReport rep = lcw::theorem_check(g, oracle, size_cap);
            std::cout << lcw::to_json(rep).dump(as_json ? -1 : 2) << "\n";
            return rep.holds ? kOk : kNegative;
        }

        if (*swp) {
            lcw::SweepOptions opts;
            opts.seed = seed;
            opts.threads = deterministic ? 1 : threads;
            std::vector<std::string> names = sweep_names.empty() ? kAllSweeps : sweep_names;
            bool clean = true;
            nlohmann::json rows = nlohmann::json::array();
            for (const std::string& name : names) {
                lcw::SweepResult r = run_named_sweep(name, opts, full);
                clean = clean && r.violations == 0;
                if (as_json) {
                    nlohmann::json row{{"name", r.name},
                                       {"checked", r.checked},
                                       {"violations", r.violations},
                                       {"notes", r.notes},
                                       {"details", r.details}};
                    if (!deterministic) row["seconds"] = r.seconds;
                    rows.push_back(std::move(row));
                } else {
                    std::ostringstream line;
                    line << r.name << ": checked=" << r.checked
                         << " violations=" << r.violations << " [" << r.notes << "]";
                    if (!deterministic) {
                        line.setf(std::ios::fixed);
                        line.precision(2);
                        line << " " << r.seconds << "s";
                    }
                    std::cout << line.str() << "\n";
                    if (r.violations != 0) std::cout << "  " << r.details.dump() << "\n";
                }
            }
            if (as_json) std::cout << rows.dump() << "\n";
            return clean ? kOk : kNegative;
        }
    } catch (const lcw::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const lcw::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const lcw::ExprError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
