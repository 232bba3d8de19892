#include "folkman/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "folkman/enumeration.hpp"
#include "folkman/graph6.hpp"
#include "folkman/invariants.hpp"

#include <json.hpp>

namespace folkman {

namespace {

struct CandidateResult {
    ArrowingOutcome outcome;
    bool skipped = false;
};

std::string mode_name(ArrowingMode mode) {
    return mode == ArrowingMode::Vertex ? "vertex" : "edge";
}

std::vector<Graph> collect_candidates(const SearchSpec& spec) {
    std::vector<Graph> candidates;
    switch (spec.source) {
        case SearchSpec::Source::File: {
            std::ifstream in(spec.path);
            if (!in) throw std::runtime_error("search: cannot open " + spec.path);
            candidates = read_graph6_stream(in);
            break;
        }
        case SearchSpec::Source::Exhaustive: {
            if (spec.max_n < 1 || spec.max_n > 9) {
                throw std::invalid_argument("search: exhaustive source needs 1 <= n <= 9");
            }
            for (int n = 1; n <= spec.max_n; ++n) {
                for_each_nonisomorphic(n, [&](const Graph& g) { candidates.push_back(g); });
            }
            break;
        }
        case SearchSpec::Source::Random: {
            for (int i = 0; i < spec.random.count; ++i) {
                candidates.push_back(random_graph(spec.random.n, spec.random.edge_probability,
                                                  spec.random.seed, uint64_t(i)));
            }
            break;
        }
    }
    return candidates;
}

}  // namespace

Graph random_graph(int n, double p, uint64_t seed, uint64_t index) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + index + 1);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

std::string BoundReport::to_text() const {
    std::ostringstream out;
    out << "source=" << source << '\n';
    out << "avoid=" << (avoid_name.empty() ? "none" : avoid_name) << '\n';
    out << "targets=" << targets_name << '\n';
    out << "mode=" << mode << '\n';
    if (seed) out << "seed=" << seed << '\n';
    out << "graphs_tested=" << graphs_tested << '\n';
    out << "skipped_not_free=" << skipped_not_free << '\n';
    out << "fails=" << fails << '\n';
    out << "arrows=" << arrows_count << '\n';
    out << "indeterminate=" << indeterminate << '\n';
    out << "best=" << (best_graph6 ? *best_graph6 : std::string("NONE")) << '\n';
    if (best_graph6) out << "best_order=" << best_order << '\n';
    out << "time_ms=" << millis << '\n';
    return out.str();
}

std::string BoundReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["source"] = source;
    j["avoid"] = avoid_name;
    j["targets"] = targets_name;
    j["mode"] = mode;
    j["seed"] = seed;
    j["graphs_tested"] = graphs_tested;
    j["skipped_not_free"] = skipped_not_free;
    j["fails"] = fails;
    j["arrows"] = arrows_count;
    j["indeterminate"] = indeterminate;
    j["best"] = best_graph6 ? nlohmann::json(*best_graph6) : nlohmann::json(nullptr);
    j["best_order"] = best_order;
    j["time_ms"] = millis;
    return j.dump();
}

BoundReport search_upper_bound(const SearchSpec& spec) {
    auto start = std::chrono::steady_clock::now();
    BoundReport report;
    switch (spec.source) {
        case SearchSpec::Source::File:
            report.source = "file:" + spec.path;
            break;
        case SearchSpec::Source::Exhaustive:
            report.source = "exhaustive:n<=" + std::to_string(spec.max_n);
            break;
        case SearchSpec::Source::Random: {
            std::ostringstream s;
            s << "random:n=" << spec.random.n << ",p=" << spec.random.edge_probability
              << ",count=" << spec.random.count;
            report.source = s.str();
            report.seed = spec.random.seed;
            break;
        }
    }
    report.avoid_name = spec.avoid_name;
    report.targets_name = spec.targets_name;
    report.mode = mode_name(spec.mode);

    std::vector<Graph> candidates = collect_candidates(spec);
    std::vector<CandidateResult> results(candidates.size());

    auto evaluate = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            const Graph& g = candidates[i];
            if (spec.avoid && !is_free(g, *spec.avoid)) {
                results[i] = {ArrowingOutcome::Fails, true};
                continue;
            }
            ArrowingInstance instance{g, spec.mode, spec.targets};
            results[i] = {arrows(instance, spec.limits).outcome, false};
        }
    };
    unsigned jobs = spec.jobs <= 0 ? std::max(1u, std::thread::hardware_concurrency())
                                   : unsigned(spec.jobs);
    if (jobs <= 1 || candidates.size() < 2 * jobs) {
        evaluate(0, candidates.size());
    } else {
        std::vector<std::thread> threads;
        size_t chunk = (candidates.size() + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            size_t begin = t * chunk;
            size_t end = std::min(candidates.size(), begin + chunk);
            if (begin >= end) break;
            threads.emplace_back(evaluate, begin, end);
        }
        for (auto& th : threads) th.join();
    }

    // Deterministic reduction: minimum (order, graph6 string) over witnesses.
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (results[i].skipped) {
            ++report.skipped_not_free;
            continue;
        }
        ++report.graphs_tested;
        switch (results[i].outcome) {
            case ArrowingOutcome::Fails:
                ++report.fails;
                break;
            case ArrowingOutcome::Indeterminate:
                ++report.indeterminate;
                break;
            case ArrowingOutcome::Arrows: {
                ++report.arrows_count;
                std::string g6 = emit_graph6(candidates[i]);
                int order = candidates[i].order();
                if (!report.best_graph6 || order < report.best_order ||
                    (order == report.best_order && g6 < *report.best_graph6)) {
                    report.best_graph6 = g6;
                    report.best_order = order;
                }
                break;
            }
        }
    }

    // Re-validate the winner from its serialized form alone.
    if (report.best_graph6) {
        Graph revived = parse_graph6(*report.best_graph6);
        bool ok = !spec.avoid || is_free(revived, *spec.avoid);
        if (ok) {
            ArrowingInstance instance{revived, spec.mode, spec.targets};
            ok = arrows(instance, spec.limits).outcome == ArrowingOutcome::Arrows;
        }
        if (!ok) throw std::logic_error("search: witness failed re-validation from graph6");
    }
    report.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

}  // namespace folkman
