#include "folkman/extension.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "folkman/constructions.hpp"
#include "folkman/invariants.hpp"

namespace folkman {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

EdgeColor opposite(EdgeColor c) {
    return c == EdgeColor::Red ? EdgeColor::Blue : EdgeColor::Red;
}

// Map an edge coloring of delete_vertex(g, u) onto g's edge indices.
// delete_vertex relabels by order-preserving compaction: v -> v - (v > u).
void copy_reduced_coloring(const Graph& g, int u, const Graph& reduced,
                           const EdgeColoring& chi, EdgeColoring& out) {
    require(int(chi.size()) == reduced.size(),
            "coloring length does not match E(G-u) = " + std::to_string(reduced.size()));
    for (int e = 0; e < reduced.size(); ++e) {
        auto [a, b] = reduced.edge_at(e);
        int ga = a + (a >= u ? 1 : 0);
        int gb = b + (b >= u ? 1 : 0);
        out[size_t(g.edge_index(ga, gb))] = chi[size_t(e)];
    }
}

// Walk a 2-regular component into cyclic order starting along its
// lexicographically smallest edge.
std::vector<int> cycle_order(const Graph& g, const VertexSet& component) {
    std::pair<int, int> smallest{-1, -1};
    for (int v = component.first(); v >= 0; v = component.next_after(v)) {
        VertexSet nb = g.neighbors(v) & component;
        for (int w = nb.next_after(v); w >= 0; w = nb.next_after(w)) {
            if (smallest.first < 0 || std::pair{v, w} < smallest) smallest = {v, w};
        }
    }
    std::vector<int> order{smallest.first, smallest.second};
    VertexSet visited;
    visited.set(smallest.first);
    visited.set(smallest.second);
    while (int(order.size()) < component.count()) {
        VertexSet nb = (g.neighbors(order.back()) & component) - visited;
        int next = nb.first();
        order.push_back(next);
        visited.set(next);
    }
    return order;
}

bool supports_peeling(const GraphClass& cls) {
    return cls.kind == GraphClass::Kind::B3Free || cls.kind == GraphClass::Kind::K1P4Free;
}

}  // namespace

std::vector<VertexSet> k4_cliques(const Graph& g) {
    std::vector<VertexSet> cliques;
    int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int b = g.neighbors(a).next_after(a); b >= 0; b = g.neighbors(a).next_after(b)) {
            VertexSet common_ab = g.neighbors(a) & g.neighbors(b);
            for (int c = common_ab.next_after(b); c >= 0; c = common_ab.next_after(c)) {
                VertexSet common = common_ab & g.neighbors(c);
                for (int d = common.next_after(c); d >= 0; d = common.next_after(d)) {
                    VertexSet q;
                    q.set(a);
                    q.set(b);
                    q.set(c);
                    q.set(d);
                    cliques.push_back(q);
                }
            }
        }
    }
    return cliques;
}

Graph GraphClass::forbidden() const {
    switch (kind) {
        case Kind::J3Free: return j_graph(3);
        case Kind::J4Free: return j_graph(4);
        case Kind::B3Free: return book_graph(3);
        case Kind::K1P4Free: return k1_plus_p4();
        case Kind::JkFree: return j_graph(k);
    }
    throw std::logic_error("GraphClass::forbidden: bad kind");
}

bool GraphClass::member(const Graph& g) const {
    return is_free(g, forbidden());
}

std::string GraphClass::name() const {
    switch (kind) {
        case Kind::J3Free: return "j3free";
        case Kind::J4Free: return "j4free";
        case Kind::B3Free: return "b3free";
        case Kind::K1P4Free: return "k1p4free";
        case Kind::JkFree: return "j" + std::to_string(k) + "free";
    }
    return "?";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    if (lower == "j3free") return GraphClass::j3_free();
    if (lower == "j4free") return GraphClass::j4_free();
    if (lower == "b3free") return GraphClass::b3_free();
    if (lower == "k1p4free") return GraphClass::k1p4_free();
    return std::nullopt;
}

NeighborhoodPlan classify_neighborhood(const Graph& g, int u, const GraphClass& cls) {
    require(u >= 0 && u < g.order(), "classify_neighborhood: vertex out of range");
    // Structural condition on G[N(u)] implied by the class: a violation means
    // the forbidden graph sits at u, i.e. the class precondition was false.
    Graph local_forbidden;
    switch (cls.kind) {
        case GraphClass::Kind::B3Free:
            local_forbidden = star_graph(3);  // no K_{1,3}: max degree <= 2
            break;
        case GraphClass::Kind::K1P4Free:
            local_forbidden = path_graph(4);  // no P_4: stars and triangles
            break;
        case GraphClass::Kind::J4Free:
            local_forbidden = path_graph(3);  // no P_3: a matching
            break;
        default:
            throw std::invalid_argument("classify_neighborhood: unsupported class " + cls.name());
    }

    NeighborhoodPlan plan;
    plan.u = u;
    const VertexSet& hood = g.neighbors(u);
    VertexSet remaining = hood;
    while (!remaining.empty()) {
        // Component of G[N(u)] containing the smallest remaining vertex.
        VertexSet comp;
        std::vector<int> queue{remaining.first()};
        comp.set(queue[0]);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            VertexSet nb = (g.neighbors(v) & hood) - comp;
            for (int w = nb.first(); w >= 0; w = nb.next_after(w)) {
                comp.set(w);
                queue.push_back(w);
            }
        }
        remaining -= comp;

        Graph sub = induced_subgraph(g, comp);
        if (contains_subgraph(sub, local_forbidden)) {
            throw std::invalid_argument(
                "classify_neighborhood: G[N(" + std::to_string(u) + ")] contains " +
                (cls.kind == GraphClass::Kind::B3Free ? "K_{1,3}" : "a forbidden path") +
                "; G is not " + cls.name());
        }

        ComponentPlan cp;
        cp.vertices = comp;
        int order = comp.count();
        int edges_inside = sub.size();
        auto bip = is_bipartite(sub);
        if (bip) {
            cp.kind = ComponentPlan::Kind::Bipartite;
            std::vector<int> labels;
            for (int v = comp.first(); v >= 0; v = comp.next_after(v)) labels.push_back(v);
            for (size_t i = 0; i < labels.size(); ++i) {
                (bip->side0.test(int(i)) ? cp.part0 : cp.part1).set(labels[i]);
            }
        } else if (cls.kind == GraphClass::Kind::B3Free) {
            // Max degree <= 2 and not bipartite: an odd cycle. part0 is the
            // lexicographically smallest edge plus alternating picks so that
            // it spans exactly one edge; part1 is independent.
            std::vector<int> order_list = cycle_order(g, comp);
            cp.kind = ComponentPlan::Kind::OddSplit;
            cp.anchor = {order_list[0], order_list[1]};
            cp.part0.set(order_list[0]);
            cp.part0.set(order_list[1]);
            for (size_t i = 3; i + 1 < order_list.size(); i += 2) cp.part0.set(order_list[i]);
            for (size_t i = 2; i < order_list.size(); i += 2) cp.part1.set(order_list[i]);
        } else {
            // P_4-free and not bipartite: a triangle. Two vertices span the
            // single part0 edge, the third is the independent side.
            if (order != 3 || edges_inside != 3) {
                throw std::logic_error("classify_neighborhood: unexpected component shape");
            }
            std::vector<int> verts;
            for (int v = comp.first(); v >= 0; v = comp.next_after(v)) verts.push_back(v);
            cp.kind = ComponentPlan::Kind::OddSplit;
            cp.anchor = {verts[0], verts[1]};
            cp.part0.set(verts[0]);
            cp.part0.set(verts[1]);
            cp.part1.set(verts[2]);
        }
        plan.components.push_back(std::move(cp));
    }
    return plan;
}

EdgeColoring extend_edge_coloring(const Graph& g, int u, const EdgeColoring& chi,
                                  const GraphClass& cls) {
    require(supports_peeling(cls) || cls.kind == GraphClass::Kind::J4Free,
            "extend_edge_coloring: unsupported class " + cls.name());
    require(cls.member(g), "extend_edge_coloring: G is not " + cls.name());
    Graph reduced = delete_vertex(g, u);
    EdgeColoring result(size_t(g.size()), EdgeColor::Red);
    copy_reduced_coloring(g, u, reduced, chi, result);
    if (find_monochromatic_triangle(reduced, chi)) {
        throw std::invalid_argument("extend_edge_coloring: chi has a monochromatic triangle");
    }

    NeighborhoodPlan plan = classify_neighborhood(g, u, cls);
    for (const ComponentPlan& cp : plan.components) {
        if (cp.kind == ComponentPlan::Kind::Bipartite) {
            for (int v = cp.part0.first(); v >= 0; v = cp.part0.next_after(v)) {
                result[size_t(g.edge_index(u, v))] = EdgeColor::Red;
            }
            for (int v = cp.part1.first(); v >= 0; v = cp.part1.next_after(v)) {
                result[size_t(g.edge_index(u, v))] = EdgeColor::Blue;
            }
        } else {
            EdgeColor anchor_color = result[size_t(g.edge_index(cp.anchor.first, cp.anchor.second))];
            for (int v = cp.part0.first(); v >= 0; v = cp.part0.next_after(v)) {
                result[size_t(g.edge_index(u, v))] = opposite(anchor_color);
            }
            for (int v = cp.part1.first(); v >= 0; v = cp.part1.next_after(v)) {
                result[size_t(g.edge_index(u, v))] = anchor_color;
            }
        }
    }
    return result;
}

EdgeColoring extend_edge_coloring_thm2(const Graph& g, int u, const EdgeColoring& chi, int k,
                                       const VertexSet& part0, const VertexSet& part1) {
    require(k >= 2, "extend_edge_coloring_thm2: needs k >= 2");
    require(u >= 0 && u < g.order(), "extend_edge_coloring_thm2: vertex out of range");
    require(is_free(g, j_graph(k + 2)),
            "extend_edge_coloring_thm2: G contains J_" + std::to_string(k + 2));
    VertexSet hood = g.neighbors(u);
    require((part0 | part1) == hood && !(part0.intersects(part1)),
            "extend_edge_coloring_thm2: parts must partition N(u)");
    Graph kk = complete_graph(k);
    require(is_free(induced_subgraph(g, part0), kk),
            "extend_edge_coloring_thm2: K_k inside part 0");
    require(is_free(induced_subgraph(g, part1), kk),
            "extend_edge_coloring_thm2: K_k inside part 1");

    Graph reduced = delete_vertex(g, u);
    EdgeColoring result(size_t(g.size()), EdgeColor::Red);
    copy_reduced_coloring(g, u, reduced, chi, result);
    for (EdgeColor color : {EdgeColor::Red, EdgeColor::Blue}) {
        require(!has_monochromatic_clique(reduced, chi, color, k + 1),
                "extend_edge_coloring_thm2: chi has a monochromatic K_" + std::to_string(k + 1));
    }

    for (int v = part0.first(); v >= 0; v = part0.next_after(v)) {
        result[size_t(g.edge_index(u, v))] = EdgeColor::Red;
    }
    for (int v = part1.first(); v >= 0; v = part1.next_after(v)) {
        result[size_t(g.edge_index(u, v))] = EdgeColor::Blue;
    }
    return result;
}

EdgeColoring build_good_coloring(const Graph& g, const GraphClass& cls) {
    require(cls.member(g), "build_good_coloring: G is not " + cls.name());
    if (cls.kind == GraphClass::Kind::J4Free) {
        // Triangles of a J_4-free graph are pairwise edge-disjoint: color the
        // highest-indexed edge of each blue, everything else red.
        EdgeColoring result(size_t(g.size()), EdgeColor::Red);
        int n = g.order();
        for (int a = 0; a < n; ++a) {
            for (int b = g.neighbors(a).next_after(a); b >= 0; b = g.neighbors(a).next_after(b)) {
                VertexSet common = g.neighbors(a) & g.neighbors(b);
                for (int c = common.next_after(b); c >= 0; c = common.next_after(c)) {
                    int blue = std::max({g.edge_index(a, b), g.edge_index(a, c),
                                         g.edge_index(b, c)});
                    result[size_t(blue)] = EdgeColor::Blue;
                }
            }
        }
        if (find_monochromatic_triangle(g, result)) {
            throw std::logic_error("build_good_coloring: J4-free coloring failed validation");
        }
        return result;
    }
    require(supports_peeling(cls), "build_good_coloring: unsupported class " + cls.name());

    // Peel descending, reinsert ascending: chi_t colors G[{0..t-1}].
    EdgeColoring chi;
    for (int t = 2; t <= g.order(); ++t) {
        Graph sub = induced_subgraph(g, VertexSet::range(t));
        chi = extend_edge_coloring(sub, t - 1, chi, cls);
    }
    if (find_monochromatic_triangle(g, chi)) {
        throw std::logic_error("build_good_coloring: peeling produced a bad coloring");
    }
    return chi;
}

Graph delete_k4_edges(const Graph& g) {
    std::vector<bool> deleted(size_t(g.size()), false);
    for (const VertexSet& q : k4_cliques(g)) {
        std::vector<int> verts;
        for (int v = q.first(); v >= 0; v = q.next_after(v)) verts.push_back(v);
        for (size_t i = 0; i < verts.size(); ++i) {
            for (size_t j = i + 1; j < verts.size(); ++j) {
                deleted[size_t(g.edge_index(verts[i], verts[j]))] = true;
            }
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.size(); ++e) {
        if (!deleted[size_t(e)]) edges.push_back(g.edge_at(e));
    }
    return Graph(g.order(), edges);
}

EdgeColoring lift_coloring_lemma7(const Graph& g, const EdgeColoring& chi_prime) {
    require(is_free(g, khat_graph(4, 2)), "lift_coloring_lemma7: G contains khat(4,2)");
    Graph residue = delete_k4_edges(g);
    require(int(chi_prime.size()) == residue.size(),
            "lift_coloring_lemma7: coloring length does not match the K_4-deleted residue");
    if (find_monochromatic_triangle(residue, chi_prime)) {
        throw std::invalid_argument("lift_coloring_lemma7: chi has a monochromatic triangle");
    }
    EdgeColoring result(size_t(g.size()), EdgeColor::Red);
    for (int e = 0; e < residue.size(); ++e) {
        auto [a, b] = residue.edge_at(e);
        result[size_t(g.edge_index(a, b))] = chi_prime[size_t(e)];
    }
    for (const VertexSet& q : k4_cliques(g)) {
        std::vector<int> v;
        for (int x = q.first(); x >= 0; x = q.next_after(x)) v.push_back(x);
        // 4-cycle red, diagonals blue; no monochromatic triangle inside.
        result[size_t(g.edge_index(v[0], v[1]))] = EdgeColor::Red;
        result[size_t(g.edge_index(v[1], v[2]))] = EdgeColor::Red;
        result[size_t(g.edge_index(v[2], v[3]))] = EdgeColor::Red;
        result[size_t(g.edge_index(v[0], v[3]))] = EdgeColor::Red;
        result[size_t(g.edge_index(v[0], v[2]))] = EdgeColor::Blue;
        result[size_t(g.edge_index(v[1], v[3]))] = EdgeColor::Blue;
    }
    if (find_monochromatic_triangle(g, result)) {
        throw std::logic_error("lift_coloring_lemma7: lifted coloring failed validation");
    }
    return result;
}

EdgeColoring lemma11_coloring(const Graph& g, int u, std::span<const VertexSet> parts, int k) {
    require(u >= 0 && u < g.order(), "lemma11_coloring: vertex out of range");
    require(!parts.empty(), "lemma11_coloring: empty partition");
    VertexSet rest = g.vertices();
    rest.reset(u);
    VertexSet seen;
    for (const VertexSet& part : parts) {
        require(!part.intersects(seen), "lemma11_coloring: parts overlap");
        require(part.subset_of(rest), "lemma11_coloring: part leaves V(G)-u");
        seen |= part;
    }
    require(seen == rest, "lemma11_coloring: parts do not cover V(G)-u");
    Graph kk = complete_graph(k);
    for (const VertexSet& part : parts) {
        require(is_free(induced_subgraph(g, part), kk),
                "lemma11_coloring: K_" + std::to_string(k) + " inside a part");
    }

    std::vector<int> part_of(size_t(g.order()), -1);
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int v = parts[i].first(); v >= 0; v = parts[i].next_after(v)) part_of[size_t(v)] = int(i);
    }
    const VertexSet& hood = g.neighbors(u);
    EdgeColoring result(size_t(g.size()), EdgeColor::Red);
    for (int e = 0; e < g.size(); ++e) {
        auto [a, b] = g.edge_at(e);
        if (a == u || b == u) {
            result[size_t(e)] = EdgeColor::Red;
        } else if (part_of[size_t(a)] == part_of[size_t(b)] ||
                   (hood.test(a) && hood.test(b))) {
            result[size_t(e)] = EdgeColor::Blue;
        } else {
            result[size_t(e)] = EdgeColor::Red;
        }
    }
    return result;
}

std::optional<std::array<int, 3>> find_monochromatic_triangle(const Graph& g,
                                                              const EdgeColoring& coloring) {
    int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int b = g.neighbors(a).next_after(a); b >= 0; b = g.neighbors(a).next_after(b)) {
            EdgeColor ab = coloring[size_t(g.edge_index(a, b))];
            VertexSet common = g.neighbors(a) & g.neighbors(b);
            for (int c = common.next_after(b); c >= 0; c = common.next_after(c)) {
                if (coloring[size_t(g.edge_index(a, c))] == ab &&
                    coloring[size_t(g.edge_index(b, c))] == ab) {
                    return std::array<int, 3>{a, b, c};
                }
            }
        }
    }
    return std::nullopt;
}

bool has_monochromatic_clique(const Graph& g, const EdgeColoring& coloring, EdgeColor color,
                              int size) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.size(); ++e) {
        if (coloring[size_t(e)] == color) edges.push_back(g.edge_at(e));
    }
    Graph mono(g.order(), edges);
    return clique_number(mono).size >= size;
}

std::string edge_coloring_to_string(const EdgeColoring& coloring) {
    std::string s;
    s.reserve(coloring.size());
    for (EdgeColor c : coloring) s.push_back(c == EdgeColor::Red ? '0' : '1');
    return s;
}

}  // namespace folkman
