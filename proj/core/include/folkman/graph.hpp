#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "folkman/bitset.hpp"

namespace folkman {

/// Labeled simple undirected graph with per-vertex adjacency bit masks.
///
/// Vertices are 0..n-1 with n <= 512. Every edge carries a dense index in
/// column-major upper-triangle order -- (0,1),(0,2),(1,2),(0,3),(1,3),... --
/// the same bit order graph6 uses, so edge-indexed data (colorings, CNF
/// variables, witness vectors) never needs translation between layers.
/// Graphs are immutable after construction and safe to share across threads.
class Graph {
public:
    static constexpr int max_order = 512;

    Graph() = default;
    Graph(int n, std::span<const std::pair<int, int>> edge_list);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    VertexSet vertices() const { return VertexSet::range(n_); }

    /// Edges in column-major upper-triangle order, each stored as (u,v), u<v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Dense index of edge {u,v}, or -1 when not an edge.
    int edge_index(int u, int v) const;
    std::pair<int, int> edge_at(int index) const { return edges_[index]; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::pair<int, int>> edges_;
};

Graph make_graph(int n, std::span<const std::pair<int, int>> edges);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

/// Disjoint union plus all cross edges; H's vertices are relabeled after G's.
Graph join(const Graph& g, const Graph& h);

/// Subgraph induced by s, relabeled 0..|s|-1 preserving ascending vertex order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Equals induced_subgraph(g, V(g) minus {u}).
Graph delete_vertex(const Graph& g, int u);

Graph complement(const Graph& g);

/// Disjoint union; H relabeled after G, no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace folkman
