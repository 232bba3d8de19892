#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

enum class ArrowingMode { Vertex, Edge };

/// Host graph plus one target per color. Color i forbids a monochromatic
/// copy of targets[i]; elements are host vertices or host edges per mode.
struct ArrowingInstance {
    Graph host;
    ArrowingMode mode = ArrowingMode::Vertex;
    std::vector<Graph> targets;

    int element_count() const {
        return mode == ArrowingMode::Vertex ? host.order() : host.size();
    }
    int color_count() const { return static_cast<int>(targets.size()); }

    /// Throws std::invalid_argument unless r >= 2, every target is nonempty,
    /// and in edge mode every target has at least one edge.
    void validate() const;
};

/// Total or partial assignment of colors to elements; -1 marks unset.
struct ElementColoring {
    ArrowingMode mode = ArrowingMode::Vertex;
    int colors = 2;
    std::vector<int8_t> assign;

    bool total() const {
        for (int8_t c : assign) {
            if (c < 0) return false;
        }
        return true;
    }
    std::string to_string() const;  // one digit per element
};

/// Deduplicated element sets of embedded target copies, one list per color.
struct OccurrenceSet {
    std::vector<std::vector<std::vector<uint32_t>>> by_color;

    size_t total() const {
        size_t t = 0;
        for (const auto& list : by_color) t += list.size();
        return t;
    }
};

/// Complete and deduplicated: a total coloring has a monochromatic copy of
/// targets[i] iff some listed set of color i is entirely colored i.
/// Throws std::length_error past the occurrence cap.
OccurrenceSet enumerate_occurrences(const ArrowingInstance& instance,
                                    size_t cap = 10'000'000);

enum class ArrowingOutcome { Arrows, Fails, Indeterminate };

struct SolveStats {
    uint64_t nodes = 0;
    double millis = 0.0;
};

struct Verdict {
    ArrowingOutcome outcome = ArrowingOutcome::Indeterminate;
    std::optional<ElementColoring> witness;  // present iff Fails
    SolveStats stats;
};

struct SolveLimits {
    uint64_t max_nodes = 50'000'000;
    size_t occurrence_cap = 10'000'000;
};

/// Exact decision by backtracking over elements with unit propagation over
/// occurrences; most-constrained-element branching, lowest index on ties.
/// Hitting the node cap yields Indeterminate, never a wrong verdict. A Fails
/// witness is re-validated by an independent monochromatic scan before return.
Verdict arrows(const ArrowingInstance& instance, const SolveLimits& limits = {});

/// Exhaustive enumeration of all r^k colorings; requires r^k <= 2^26.
Verdict arrows_bruteforce(const ArrowingInstance& instance);

/// Independent validity check: restricts the host to each color class and
/// runs the subgraph search directly (no occurrence machinery).
bool is_good_coloring(const ArrowingInstance& instance, const ElementColoring& coloring);

/// DIMACS CNF. Two colors: one variable per element, true = color 0, one
/// clause per occurrence. More colors: one-hot variables element*r+color+1
/// with exactly-one constraints. Satisfiable iff the instance Fails.
std::string export_cnf(const ArrowingInstance& instance, size_t cap = 10'000'000);

/// Decode a DIMACS-style model line ("v 1 -2 ... 0" or bare literals) into a
/// coloring; validates variable count, one-hot consistency, and goodness.
ElementColoring decode_model(const ArrowingInstance& instance, std::string_view model_text);

}  // namespace folkman
