#include "folkman/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace folkman {

namespace {

// Column-major upper-triangle order: sort by (max endpoint, min endpoint).
bool edge_less(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> edge_list) {
    if (n < 0 || n > max_order) {
        throw std::invalid_argument("graph order out of range: " + std::to_string(n));
    }
    n_ = n;
    adj_.assign(n, VertexSet{});
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) +
                                        "," + std::to_string(v) + "}");
        }
        if (u == v) {
            throw std::invalid_argument("loop edge rejected: {" + std::to_string(u) + "," +
                                        std::to_string(v) + "}");
        }
        if (adj_[u].test(v)) continue;  // collapse duplicates
        adj_[u].set(v);
        adj_[v].set(u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end(), edge_less);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v}, edge_less);
    if (it == edges_.end() || *it != std::pair{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edges) {
    return Graph(n, edges);
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph join(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > Graph::max_order) {
        throw std::invalid_argument("join order exceeds " + std::to_string(Graph::max_order));
    }
    std::vector<std::pair<int, int>> edges(g.edges());
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, v + g.order());
    }
    return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!s.subset_of(g.vertices())) {
        throw std::invalid_argument("induced_subgraph: vertex set out of range");
    }
    std::vector<int> relabel(g.order(), -1);
    int k = 0;
    for (int v = s.first(); v >= 0; v = s.next_after(v)) relabel[v] = k++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        if (relabel[u] >= 0 && relabel[v] >= 0) edges.emplace_back(relabel[u], relabel[v]);
    }
    return Graph(k, edges);
}

Graph delete_vertex(const Graph& g, int u) {
    if (u < 0 || u >= g.order()) {
        throw std::invalid_argument("delete_vertex: vertex out of range");
    }
    VertexSet keep = g.vertices();
    keep.reset(u);
    return induced_subgraph(g, keep);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < g.order(); ++v) {
        for (int u = 0; u < v; ++u) {
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > Graph::max_order) {
        throw std::invalid_argument("disjoint_union order exceeds " +
                                    std::to_string(Graph::max_order));
    }
    std::vector<std::pair<int, int>> edges(g.edges());
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    return Graph(n, edges);
}

}  // namespace folkman
