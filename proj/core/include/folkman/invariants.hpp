#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// Injective map from V(H) into V(G) carrying every edge of H onto an edge
/// of G (subgraph embedding, not induced).
using Embedding = std::vector<int>;

/// First embedding of h into g found by backtracking over degree-sorted
/// pattern vertices with neighbor-mask pruning, or nullopt when none exists.
std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& h);

bool is_free(const Graph& g, const Graph& h);

/// Visit every embedding of h into g, modulo permutations of interchangeable
/// pattern vertices (twins). Return false from the callback to stop early.
void for_each_embedding(const Graph& g, const Graph& h,
                        const std::function<bool(const Embedding&)>& visit);

struct CliqueResult {
    int size = 0;
    VertexSet witness;
};

/// Exact clique number, branch and bound with a greedy-coloring upper bound.
CliqueResult clique_number(const Graph& g);

/// Exact independence number, computed as the clique number of the complement.
CliqueResult independence_number(const Graph& g);

struct ChromaticResult {
    int count = 0;
    std::vector<int> colors;  // proper coloring witness, one color per vertex
};

/// Exact chromatic number for n <= 64: iterative deepening on the color
/// count with the first maximum clique pre-colored.
ChromaticResult chromatic_number(const Graph& g);

struct Bipartition {
    VertexSet side0, side1;
};

/// BFS 2-coloring of the whole graph.
std::optional<Bipartition> is_bipartite(const Graph& g);

enum class ComponentKind { Bipartite, OddCycle, Triangle, Other };

struct Component {
    ComponentKind kind;
    VertexSet vertices;
    Bipartition parts;  // populated when kind == Bipartite
};

/// Connected components in order of smallest vertex. Triangle is reported in
/// preference to OddCycle; OddCycle means 2-regular, connected, odd order.
std::vector<Component> classify_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace folkman
