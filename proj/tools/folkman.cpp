// folkman: exact workbench for Ramsey arrowing and generalized Folkman
// numbers. Subcommands: construct, invariant, arrow, goodcolor, lemma7,
// lemma11, enumerate, search, verify-paper. Graphs travel as graph6 on
// stdin/stdout. Exit codes: 0 completed, 2 an arrowing decision hit its
// resource cap (INDETERMINATE), 1 error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "folkman/arrowing.hpp"
#include "folkman/constructions.hpp"
#include "folkman/enumeration.hpp"
#include "folkman/extension.hpp"
#include "folkman/graph6.hpp"
#include "folkman/invariants.hpp"
#include "folkman/search.hpp"
#include "folkman/verify.hpp"

namespace {

using namespace folkman;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitIndeterminate = 2;

Graph graph_from_arg(const std::string& arg) {
    if (arg == "-") {
        std::string line;
        if (!std::getline(std::cin, line)) throw std::runtime_error("no graph6 line on stdin");
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        return parse_graph6(line);
    }
    return parse_graph6(arg);
}

Graph graph_from_token_or_g6(const std::string& token) {
    if (auto g = parse_graph_token(token)) return *g;
    throw std::runtime_error("cannot parse graph token or graph6: " + token);
}

std::vector<Graph> parse_targets(const std::string& list) {
    std::vector<Graph> targets;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        targets.push_back(graph_from_token_or_g6(token));
    }
    return targets;
}

std::vector<VertexSet> parse_parts(const std::string& spec, int n) {
    std::vector<VertexSet> parts;
    std::stringstream groups(spec);
    std::string group;
    while (std::getline(groups, group, ';')) {
        VertexSet part;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (item.empty()) continue;
            int v = std::stoi(item);
            if (v < 0 || v >= n) throw std::runtime_error("part vertex out of range: " + item);
            part.set(v);
        }
        parts.push_back(part);
    }
    return parts;
}

int cmd_construct(const std::string& name, const std::vector<int>& params, bool bare) {
    auto id = parse_construction(name, params);
    if (!id) {
        std::cerr << "unknown construction: " << name << '\n';
        return kExitError;
    }
    Graph g = construct(*id);
    if (bare) {
        std::cout << emit_graph6(g) << '\n';
    } else {
        std::cout << construction_name(id->tag) << ": n=" << g.order() << " m=" << g.size()
                  << " g6=" << emit_graph6(g) << '\n';
    }
    return kExitOk;
}

int cmd_invariant(const std::string& graph_arg, bool clique, bool alpha, bool chi,
                  const std::string& free_arg) {
    Graph g = graph_from_arg(graph_arg);
    std::cout << "n=" << g.order() << " m=" << g.size() << '\n';
    if (clique) {
        CliqueResult r = clique_number(g);
        std::cout << "clique=" << r.size << " witness=";
        for (int v = r.witness.first(); v >= 0; v = r.witness.next_after(v)) std::cout << v << ',';
        std::cout << '\n';
    }
    if (alpha) {
        CliqueResult r = independence_number(g);
        std::cout << "alpha=" << r.size << " witness=";
        for (int v = r.witness.first(); v >= 0; v = r.witness.next_after(v)) std::cout << v << ',';
        std::cout << '\n';
    }
    if (chi) {
        ChromaticResult r = chromatic_number(g);
        std::cout << "chi=" << r.count << '\n';
    }
    if (!free_arg.empty()) {
        Graph h = graph_from_token_or_g6(free_arg);
        std::cout << "free=" << (is_free(g, h) ? "true" : "false") << '\n';
    }
    return kExitOk;
}

int cmd_arrow(const std::string& graph_arg, const std::string& mode_arg,
              const std::string& targets_arg, const std::string& cnf_path,
              const std::string& model_path, uint64_t max_nodes) {
    Graph g = graph_from_arg(graph_arg);
    ArrowingInstance instance;
    instance.host = g;
    instance.mode = mode_arg == "e" ? ArrowingMode::Edge : ArrowingMode::Vertex;
    instance.targets = parse_targets(targets_arg);

    if (!cnf_path.empty()) {
        std::string cnf = export_cnf(instance);
        if (cnf_path == "-") {
            std::cout << cnf;
        } else {
            std::ofstream out(cnf_path);
            if (!out) throw std::runtime_error("cannot write " + cnf_path);
            out << cnf;
        }
        std::cerr << "wrote CNF for " << instance.element_count() << " elements\n";
        return kExitOk;
    }
    if (!model_path.empty()) {
        std::ifstream in(model_path);
        if (!in) throw std::runtime_error("cannot read " + model_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        ElementColoring witness = decode_model(instance, buffer.str());
        std::cout << "decoded=" << witness.to_string() << '\n';
        std::cout << "good=true\n";
        return kExitOk;
    }

    SolveLimits limits;
    limits.max_nodes = max_nodes;
    Verdict verdict = arrows(instance, limits);
    switch (verdict.outcome) {
        case ArrowingOutcome::Arrows:
            std::cout << "ARROWS nodes=" << verdict.stats.nodes
                      << " time_ms=" << verdict.stats.millis << '\n';
            return kExitOk;
        case ArrowingOutcome::Fails:
            std::cout << "FAILS witness=" << verdict.witness->to_string()
                      << " nodes=" << verdict.stats.nodes
                      << " time_ms=" << verdict.stats.millis << '\n';
            return kExitOk;
        case ArrowingOutcome::Indeterminate:
            std::cout << "INDETERMINATE nodes=" << verdict.stats.nodes
                      << " time_ms=" << verdict.stats.millis << '\n';
            return kExitIndeterminate;
    }
    return kExitError;
}

int cmd_goodcolor(const std::string& graph_arg, const std::string& class_arg) {
    Graph g = graph_from_arg(graph_arg);
    auto cls = parse_graph_class(class_arg);
    if (!cls) {
        std::cerr << "unknown class: " << class_arg << " (use j4free|b3free|k1p4free)\n";
        return kExitError;
    }
    EdgeColoring chi = build_good_coloring(g, *cls);
    std::cout << edge_coloring_to_string(chi) << '\n';
    return kExitOk;
}

int cmd_lemma7(const std::string& graph_arg) {
    Graph g = graph_from_arg(graph_arg);
    Graph residue = delete_k4_edges(g);
    std::cout << "residue_g6=" << emit_graph6(residue) << '\n';
    std::cout << "deleted_edges=" << g.size() - residue.size() << '\n';
    const GraphClass classes[] = {GraphClass::j4_free(), GraphClass::b3_free(),
                                  GraphClass::k1p4_free()};
    for (const GraphClass& cls : classes) {
        if (!cls.member(residue)) continue;
        EdgeColoring chi = build_good_coloring(residue, cls);
        EdgeColoring lifted = lift_coloring_lemma7(g, chi);
        std::cout << "residue_class=" << cls.name() << '\n';
        std::cout << "colors=" << edge_coloring_to_string(lifted) << '\n';
        return kExitOk;
    }
    std::cerr << "residue is outside the supported classes (j4free, b3free, k1p4free)\n";
    return kExitError;
}

int cmd_lemma11(const std::string& graph_arg, int u, const std::string& parts_arg, int k) {
    Graph g = graph_from_arg(graph_arg);
    std::vector<VertexSet> parts = parse_parts(parts_arg, g.order());
    EdgeColoring chi = lemma11_coloring(g, u, parts, k);
    std::cout << "colors=" << edge_coloring_to_string(chi) << '\n';
    std::cout << "red_clique_free_s=" << (has_monochromatic_clique(g, chi, EdgeColor::Red,
                                                                   int(parts.size()) + 1)
                                              ? "false"
                                              : "true")
              << '\n';
    std::cout << "blue_clique_free_k=" << (has_monochromatic_clique(g, chi, EdgeColor::Blue, k)
                                               ? "false"
                                               : "true")
              << '\n';
    return kExitOk;
}

int cmd_enumerate(int n, bool connected_only, const std::string& avoid_arg) {
    std::optional<Graph> avoid;
    if (!avoid_arg.empty()) avoid = graph_from_token_or_g6(avoid_arg);
    for_each_nonisomorphic(n, [&](const Graph& g) {
        if (connected_only && !is_connected(g)) return;
        if (avoid && !is_free(g, *avoid)) return;
        std::cout << emit_graph6(g) << '\n';
    });
    return kExitOk;
}

int cmd_search(const std::string& file, int max_n, const std::string& random_arg,
               const std::string& avoid_arg, const std::string& targets_arg,
               const std::string& mode_arg, uint64_t seed, int jobs, uint64_t max_nodes,
               bool json_only) {
    SearchSpec spec;
    if (!file.empty()) {
        spec.source = SearchSpec::Source::File;
        spec.path = file;
    } else if (!random_arg.empty()) {
        spec.source = SearchSpec::Source::Random;
        std::stringstream ss(random_arg);
        std::string part;
        std::getline(ss, part, ',');
        spec.random.n = std::stoi(part);
        std::getline(ss, part, ',');
        spec.random.edge_probability = std::stod(part);
        std::getline(ss, part, ',');
        spec.random.count = std::stoi(part);
        spec.random.seed = seed;
    } else {
        spec.source = SearchSpec::Source::Exhaustive;
        spec.max_n = max_n;
    }
    if (!avoid_arg.empty()) {
        spec.avoid = graph_from_token_or_g6(avoid_arg);
        spec.avoid_name = avoid_arg;
    }
    spec.targets = parse_targets(targets_arg);
    spec.targets_name = targets_arg;
    spec.mode = mode_arg == "e" ? ArrowingMode::Edge : ArrowingMode::Vertex;
    spec.jobs = jobs;
    spec.limits.max_nodes = max_nodes;

    BoundReport report = search_upper_bound(spec);
    if (!json_only) std::cout << report.to_text();
    std::cout << "JSON: " << report.to_json() << '\n';
    return report.indeterminate > 0 ? kExitIndeterminate : kExitOk;
}

int cmd_verify(const std::vector<std::string>& ids, int jobs, uint64_t seed, bool json_only) {
    VerifyOptions options;
    options.jobs = jobs;
    options.seed = seed;
    VerifyReport report = verify_paper(ids, options);
    if (!json_only) std::cout << report.to_text();
    std::cout << "JSON: " << report.to_json() << '\n';
    return report.all_pass ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for Ramsey arrowing and generalized Folkman numbers"};
    app.require_subcommand(1);

    int jobs = 1;
    uint64_t seed = 20250214;
    app.add_option("--jobs", jobs, "worker threads for sweeps (0 = hardware)");
    app.add_option("--seed", seed, "seed for randomized sources and sampled claims");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "emit a named construction as graph6");
    std::string construct_name_arg;
    std::vector<int> construct_params;
    bool construct_bare = false;
    construct_cmd->add_option("name", construct_name_arg, "construction tag")->required();
    construct_cmd->add_option("params", construct_params, "integer parameters");
    construct_cmd->add_flag("--g6", construct_bare, "print the bare graph6 line only");

    // invariant
    auto* invariant_cmd = app.add_subcommand("invariant", "exact structural parameters");
    std::string invariant_graph;
    bool want_clique = false, want_alpha = false, want_chi = false;
    std::string free_of;
    invariant_cmd->add_option("graph6", invariant_graph, "graph6 string, or - for stdin")
        ->required();
    invariant_cmd->add_flag("--clique", want_clique, "clique number with witness");
    invariant_cmd->add_flag("--alpha", want_alpha, "independence number with witness");
    invariant_cmd->add_flag("--chi", want_chi, "chromatic number (n <= 64)");
    invariant_cmd->add_option("--free", free_of, "test H-freeness (token or graph6)");

    // arrow
    auto* arrow_cmd = app.add_subcommand("arrow", "decide G -> (targets)^mode exactly");
    std::string arrow_graph, arrow_mode = "v", arrow_targets = "K3,K3";
    std::string cnf_path, model_path;
    uint64_t max_nodes = 50'000'000;
    arrow_cmd->add_option("graph6", arrow_graph, "graph6 string, or - for stdin")->required();
    arrow_cmd->add_option("--mode", arrow_mode, "v (vertex) or e (edge)")
        ->check(CLI::IsMember({"v", "e"}));
    arrow_cmd->add_option("--targets", arrow_targets, "comma-separated targets, e.g. K3,K3");
    arrow_cmd->add_option("--cnf", cnf_path, "export DIMACS CNF to this file (- for stdout)");
    arrow_cmd->add_option("--decode", model_path, "decode a solver model file into a coloring");
    arrow_cmd->add_option("--cap", max_nodes, "search node cap before INDETERMINATE");

    // goodcolor
    auto* goodcolor_cmd =
        app.add_subcommand("goodcolor", "triangle-avoiding edge coloring for a class member");
    std::string goodcolor_graph, goodcolor_class;
    goodcolor_cmd->add_option("graph6", goodcolor_graph, "graph6 string, or - for stdin")
        ->required();
    goodcolor_cmd->add_option("--class", goodcolor_class, "j4free | b3free | k1p4free")
        ->required();

    // lemma7
    auto* lemma7_cmd =
        app.add_subcommand("lemma7", "K_4 deletion, residue coloring, and pattern lift");
    std::string lemma7_graph;
    lemma7_cmd->add_option("graph6", lemma7_graph, "graph6 string, or - for stdin")->required();

    // lemma11
    auto* lemma11_cmd = app.add_subcommand("lemma11", "the star/parts two-coloring");
    std::string lemma11_graph, lemma11_parts;
    int lemma11_u = 0, lemma11_k = 3;
    lemma11_cmd->add_option("graph6", lemma11_graph, "graph6 string, or - for stdin")->required();
    lemma11_cmd->add_option("--u", lemma11_u, "distinguished vertex")->required();
    lemma11_cmd->add_option("--parts", lemma11_parts, "partition, e.g. 1,2,3;4,5")->required();
    lemma11_cmd->add_option("--k", lemma11_k, "forbidden clique order inside parts");

    // enumerate
    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "stream nonisomorphic graphs as graph6");
    int enumerate_n = 0;
    bool enumerate_connected = false;
    std::string enumerate_avoid;
    enumerate_cmd->add_option("n", enumerate_n, "order (1..9)")->required();
    enumerate_cmd->add_flag("--connected", enumerate_connected, "connected graphs only");
    enumerate_cmd->add_option("--avoid", enumerate_avoid, "H-freeness filter (token or graph6)");

    // search
    auto* search_cmd = app.add_subcommand("search", "Folkman upper-bound search over a stream");
    std::string search_file, search_random, search_avoid, search_targets = "K3,K3",
                                                          search_mode = "v";
    int search_max_n = 5;
    uint64_t search_cap = 50'000'000;
    bool search_json = false;
    search_cmd->add_option("--file", search_file, "graph6 stream file");
    search_cmd->add_option("--max-n", search_max_n, "exhaustive source: sweep n = 1..max_n");
    search_cmd->add_option("--random", search_random, "random source: n,p,count");
    search_cmd->add_option("--avoid", search_avoid, "H-freeness filter (token or graph6)");
    search_cmd->add_option("--targets", search_targets, "comma-separated targets");
    search_cmd->add_option("--mode", search_mode, "v or e")->check(CLI::IsMember({"v", "e"}));
    search_cmd->add_option("--cap", search_cap, "per-candidate node cap");
    search_cmd->add_flag("--json", search_json, "print only the JSON block");

    // verify-paper
    auto* verify_cmd = app.add_subcommand("verify-paper", "reproduce the desk-scale claims");
    std::vector<std::string> verify_ids;
    bool verify_json = false;
    verify_cmd->add_option("claims", verify_ids,
                           "claim ids (default: all). Registry: T2-EXT T4 T5 T8 L7 L11 "
                           "C12-SMALL G127-PROPS OBS-J3 OBS-J4 FE33B5 FV223");
    verify_cmd->add_flag("--json", verify_json, "print only the JSON block");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct_cmd->parsed()) {
            return cmd_construct(construct_name_arg, construct_params, construct_bare);
        }
        if (invariant_cmd->parsed()) {
            return cmd_invariant(invariant_graph, want_clique, want_alpha, want_chi, free_of);
        }
        if (arrow_cmd->parsed()) {
            return cmd_arrow(arrow_graph, arrow_mode, arrow_targets, cnf_path, model_path,
                             max_nodes);
        }
        if (goodcolor_cmd->parsed()) return cmd_goodcolor(goodcolor_graph, goodcolor_class);
        if (lemma7_cmd->parsed()) return cmd_lemma7(lemma7_graph);
        if (lemma11_cmd->parsed()) {
            return cmd_lemma11(lemma11_graph, lemma11_u, lemma11_parts, lemma11_k);
        }
        if (enumerate_cmd->parsed()) {
            return cmd_enumerate(enumerate_n, enumerate_connected, enumerate_avoid);
        }
        if (search_cmd->parsed()) {
            return cmd_search(search_file, search_max_n, search_random, search_avoid,
                              search_targets, search_mode, seed, jobs, search_cap, search_json);
        }
        if (verify_cmd->parsed()) return cmd_verify(verify_ids, jobs, seed, verify_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
