#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

enum class EdgeColor : uint8_t { Red = 0, Blue = 1 };

/// Total 2-coloring of a host's edges, aligned to its canonical edge index.
using EdgeColoring = std::vector<EdgeColor>;

/// Hereditary graph classes with constructive good-coloring procedures.
struct GraphClass {
    enum class Kind { J3Free, J4Free, B3Free, K1P4Free, JkFree };
    Kind kind = Kind::B3Free;
    int k = 0;  // JkFree forbids J_k

    static GraphClass j3_free() { return {Kind::J3Free, 3}; }
    static GraphClass j4_free() { return {Kind::J4Free, 4}; }
    static GraphClass b3_free() { return {Kind::B3Free, 0}; }
    static GraphClass k1p4_free() { return {Kind::K1P4Free, 0}; }
    static GraphClass jk_free(int k) { return {Kind::JkFree, k}; }

    Graph forbidden() const;
    bool member(const Graph& g) const;
    std::string name() const;
};

std::optional<GraphClass> parse_graph_class(std::string_view name);

struct ComponentPlan {
    enum class Kind { Bipartite, OddSplit };
    Kind kind = Kind::Bipartite;
    VertexSet vertices;          // component of G[N(u)], host labels
    VertexSet part0, part1;      // bipartition sides, or U_1 / U_2
    std::pair<int, int> anchor;  // OddSplit: the single edge inside U_1
};

struct NeighborhoodPlan {
    int u = -1;
    std::vector<ComponentPlan> components;
};

/// Structure of G[N(u)] under the class assumption: components are bipartite
/// or odd cycles (B3-free; N(u) has max degree 2) or bipartite or triangles
/// (K1+P4-free; N(u) has no P_4). Odd components get the split where part0
/// holds exactly one edge, anchored at the lexicographically smallest cycle
/// edge, and part1 is independent. A component outside the promised shape
/// throws: the class precondition was false at u.
NeighborhoodPlan classify_neighborhood(const Graph& g, int u, const GraphClass& cls);

/// Extend a good 2-coloring chi of E(G-u) to all of E(G) without creating a
/// monochromatic triangle. chi is indexed by delete_vertex(g, u)'s edge
/// index. Bipartite components color the u-edges by side; odd components
/// color part0's u-edges opposite to chi(anchor) and part1's with it.
EdgeColoring extend_edge_coloring(const Graph& g, int u, const EdgeColoring& chi,
                                  const GraphClass& cls);

/// The K_{k+1}-avoiding extension: u--part0 edges red, u--part1 edges blue.
/// Requires g J_{k+2}-free, both parts K_k-free, chi without monochromatic
/// K_{k+1}; all verified.
EdgeColoring extend_edge_coloring_thm2(const Graph& g, int u, const EdgeColoring& chi, int k,
                                       const VertexSet& part0, const VertexSet& part1);

/// Total triangle-free-per-color 2-coloring of E(G) for a class member.
/// B3Free / K1P4Free peel vertices in descending index order and reinsert via
/// extend_edge_coloring; J4Free colors each (necessarily edge-disjoint)
/// triangle two red one blue and every remaining edge red.
EdgeColoring build_good_coloring(const Graph& g, const GraphClass& cls);

/// Vertex sets of all 4-cliques of g.
std::vector<VertexSet> k4_cliques(const Graph& g);

/// Remove every edge lying in some K_4 of g. The result is K_4-free; when g
/// has no K_4-plus-a-2-vertex (khat(4,2)), every lost triangle sits inside a
/// single K_4 and distinct K_4s are edge-disjoint.
Graph delete_k4_edges(const Graph& g);

/// Lift a good coloring of delete_k4_edges(g) back to g by giving each K_4 a
/// fixed pattern: its 4-cycle on sorted vertices red, both diagonals blue.
/// Requires g khat(4,2)-free and chi_prime good; both verified.
EdgeColoring lift_coloring_lemma7(const Graph& g, const EdgeColoring& chi_prime);

/// The two-coloring from the multicolor-lemma proof: edges at u red, edges
/// inside G[N(u)] blue, edges inside a part blue, remaining cross-part edges
/// red (blue wins where rules overlap). parts must partition V(G)-{u} and
/// each induced part must be K_k-free; verified.
EdgeColoring lemma11_coloring(const Graph& g, int u, std::span<const VertexSet> parts, int k);

/// First monochromatic triangle of the colored host, if any.
std::optional<std::array<int, 3>> find_monochromatic_triangle(const Graph& g,
                                                              const EdgeColoring& coloring);

/// Does some K_size of g have all its edges in the given color?
bool has_monochromatic_clique(const Graph& g, const EdgeColoring& coloring, EdgeColor color,
                              int size);

std::string edge_coloring_to_string(const EdgeColoring& coloring);

}  // namespace folkman
