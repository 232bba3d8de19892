#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/graph.hpp"

namespace folkman {

struct RandomModel {
    int n = 0;
    double edge_probability = 0.5;
    int count = 0;
    uint64_t seed = 1;
};

/// Candidate stream plus instance template for a Folkman upper-bound search.
struct SearchSpec {
    enum class Source { File, Exhaustive, Random };

    Source source = Source::Exhaustive;
    std::string path;        // Source::File
    int max_n = 5;           // Source::Exhaustive: sweep n = 1..max_n (<= 9)
    RandomModel random;      // Source::Random

    std::optional<Graph> avoid;  // H-freeness filter
    std::string avoid_name;
    std::vector<Graph> targets;
    std::string targets_name;
    ArrowingMode mode = ArrowingMode::Vertex;

    SolveLimits limits;
    int jobs = 1;
};

/// G(n,p) with a fixed seed: pair (u,v) is drawn in column-major order, so a
/// (seed, n, p, index) tuple always denotes the same graph.
Graph random_graph(int n, double p, uint64_t seed, uint64_t index);

struct BoundReport {
    // Parameters echoed.
    std::string source;
    std::string avoid_name;
    std::string targets_name;
    std::string mode;
    uint64_t seed = 0;

    // Outcome. The witness is re-validated from its graph6 string alone.
    std::optional<std::string> best_graph6;
    int best_order = -1;
    uint64_t graphs_tested = 0;
    uint64_t skipped_not_free = 0;
    uint64_t fails = 0;
    uint64_t arrows_count = 0;
    uint64_t indeterminate = 0;
    double millis = 0.0;

    std::string to_text() const;
    std::string to_json() const;
};

/// Stream candidates, filter by H-freeness, decide arrowing, and track the
/// minimum-order witness (ties broken by graph6 string). Deterministic for a
/// given source order and seed regardless of the worker count.
BoundReport search_upper_bound(const SearchSpec& spec);

}  // namespace folkman
