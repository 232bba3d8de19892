#include "folkman/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace folkman {

namespace {

// ---------------------------------------------------------------------------
// Subgraph embedding search.
//
// Pattern vertices are placed one at a time; the candidate set for a vertex is
// the intersection of host neighborhoods of its already-placed pattern
// neighbors, filtered by a host-degree lower bound. Interchangeable pattern
// vertices (twins: identical neighborhoods outside the pair) are forced into
// ascending host positions, which keeps the search polynomial on patterns such
// as books whose pages are mutually interchangeable.
// ---------------------------------------------------------------------------

struct EmbedContext {
    const Graph* g;
    const Graph* h;
    std::vector<int> order;        // placement order of H vertices
    std::vector<int> twin_prev;    // index in `order` of previous same-class vertex, -1
    std::vector<int> twin_left;    // vertices of the class still unplaced at this step
    std::vector<VertexSet> degree_ok;  // per H vertex: host vertices with degree >= deg_H
    std::vector<int> assignment;   // H vertex -> G vertex
    VertexSet used;
    const std::function<bool(const Embedding&)>* visit;
    bool stopped = false;
};

// Twin classes: u ~ v when their neighborhoods coincide after clearing the
// pair itself; any permutation inside such a class is an automorphism.
std::vector<int> twin_classes(const Graph& h) {
    int n = h.order();
    std::vector<int> cls(n, -1);
    int next_class = 0;
    for (int u = 0; u < n; ++u) {
        if (cls[u] >= 0) continue;
        cls[u] = next_class;
        for (int v = u + 1; v < n; ++v) {
            if (cls[v] >= 0) continue;
            VertexSet mu = h.neighbors(u);
            VertexSet mv = h.neighbors(v);
            mu.reset(u);
            mu.reset(v);
            mv.reset(u);
            mv.reset(v);
            if (!(mu == mv)) continue;
            // Pairwise check against all current members keeps the class a
            // set of mutually interchangeable vertices.
            bool ok = true;
            for (int w = 0; w < v && ok; ++w) {
                if (cls[w] != next_class) continue;
                VertexSet mw = h.neighbors(w);
                VertexSet m2 = h.neighbors(v);
                mw.reset(w);
                mw.reset(v);
                m2.reset(w);
                m2.reset(v);
                ok = mw == m2;
            }
            if (ok) cls[v] = next_class;
        }
        ++next_class;
    }
    return cls;
}

// Placement order: most-placed-neighbors first, then highest degree; members
// of a twin class are emitted in ascending vertex order so the ascending-host
// constraint below stays complete.
std::vector<int> placement_order(const Graph& h, const std::vector<int>& cls) {
    int n = h.order();
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order) {
                if (h.adjacent(u, v)) ++links;
            }
            int deg = h.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        // Substitute the earliest unplaced member of best's twin class.
        for (int v = 0; v < best; ++v) {
            if (!placed[v] && cls[v] == cls[best]) {
                best = v;
                break;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

bool embed_step(EmbedContext& ctx, size_t pos) {
    if (pos == ctx.order.size()) {
        ctx.stopped = !(*ctx.visit)(ctx.assignment);
        return ctx.stopped;
    }
    int hv = ctx.order[pos];
    VertexSet candidates = ctx.degree_ok[hv];
    for (size_t i = 0; i < pos; ++i) {
        int placed = ctx.order[i];
        if (ctx.h->adjacent(placed, hv)) candidates &= ctx.g->neighbors(ctx.assignment[placed]);
    }
    candidates -= ctx.used;
    int lower = -1;
    if (ctx.twin_prev[pos] >= 0) lower = ctx.assignment[ctx.order[ctx.twin_prev[pos]]];
    // Ascending-position constraint within a twin class, plus a counting
    // prune: the remaining class members all draw from this candidate set.
    int avail = 0;
    for (int v = candidates.next_after(lower); v >= 0; v = candidates.next_after(v)) ++avail;
    if (avail < ctx.twin_left[pos]) return false;
    for (int gv = candidates.next_after(lower); gv >= 0; gv = candidates.next_after(gv)) {
        ctx.assignment[hv] = gv;
        ctx.used.set(gv);
        bool stop = embed_step(ctx, pos + 1);
        ctx.used.reset(gv);
        if (stop) return true;
    }
    ctx.assignment[hv] = -1;
    return false;
}

void run_embedding_search(const Graph& g, const Graph& h,
                          const std::function<bool(const Embedding&)>& visit) {
    if (h.order() > g.order()) return;
    if (h.order() == 0) {
        visit(Embedding{});
        return;
    }
    EmbedContext ctx;
    ctx.g = &g;
    ctx.h = &h;
    std::vector<int> cls = twin_classes(h);
    ctx.order = placement_order(h, cls);
    int n = h.order();
    ctx.twin_prev.assign(n, -1);
    ctx.twin_left.assign(n, 1);
    for (int i = 0; i < n; ++i) {
        int remaining = 0;
        for (int j = i; j < n; ++j) {
            if (cls[ctx.order[j]] == cls[ctx.order[i]]) ++remaining;
        }
        ctx.twin_left[i] = remaining;
        for (int j = i - 1; j >= 0; --j) {
            if (cls[ctx.order[j]] == cls[ctx.order[i]]) {
                ctx.twin_prev[i] = j;
                break;
            }
        }
    }
    ctx.degree_ok.assign(n, VertexSet{});
    for (int hv = 0; hv < n; ++hv) {
        int need = h.degree(hv);
        for (int gv = 0; gv < g.order(); ++gv) {
            if (g.degree(gv) >= need) ctx.degree_ok[hv].set(gv);
        }
    }
    ctx.assignment.assign(n, -1);
    ctx.visit = &visit;
    embed_step(ctx, 0);
}

// ---------------------------------------------------------------------------
// Maximum clique, Tomita-style: expand candidates in reverse greedy-coloring
// order, bound |R| + color class.
// ---------------------------------------------------------------------------

struct CliqueContext {
    const Graph* g;
    int best = 0;
    VertexSet best_set;
};

void clique_expand(CliqueContext& ctx, VertexSet r, int r_size, const VertexSet& p) {
    if (p.empty()) {
        if (r_size > ctx.best) {
            ctx.best = r_size;
            ctx.best_set = r;
        }
        return;
    }
    // Greedy coloring of P; color numbers are a clique upper bound.
    std::vector<int> verts, colors;
    {
        VertexSet rest = p;
        int color = 0;
        while (!rest.empty()) {
            ++color;
            VertexSet avail = rest;
            for (int v = avail.first(); v >= 0; v = avail.next_after(v)) {
                verts.push_back(v);
                colors.push_back(color);
                rest.reset(v);
                avail -= ctx.g->neighbors(v);
                avail.reset(v);
            }
        }
    }
    for (size_t i = verts.size(); i-- > 0;) {
        if (r_size + colors[i] <= ctx.best) return;
        int v = verts[i];
        VertexSet np = p & ctx.g->neighbors(v);
        // Only candidates not yet processed in this frame.
        for (size_t j = i; j < verts.size(); ++j) np.reset(verts[j]);
        VertexSet nr = r;
        nr.set(v);
        clique_expand(ctx, nr, r_size + 1, np);
    }
}

// ---------------------------------------------------------------------------
// Exact k-colorability with DSATUR branching.
// ---------------------------------------------------------------------------

struct ColorContext {
    const Graph* g;
    int k;
    std::vector<int> colors;
    std::vector<uint64_t> forbidden;  // per vertex: bitmask of neighbor colors
};

bool color_step(ColorContext& ctx, int remaining) {
    if (remaining == 0) return true;
    int n = ctx.g->order();
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
        if (ctx.colors[v] >= 0) continue;
        int sat = std::popcount(ctx.forbidden[v]);
        if (sat >= ctx.k) return false;  // wiped domain
        int deg = ctx.g->degree(v);
        if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
            pick = v;
            pick_sat = sat;
            pick_deg = deg;
        }
    }
    for (int c = 0; c < ctx.k; ++c) {
        if ((ctx.forbidden[pick] >> c) & 1) continue;
        ctx.colors[pick] = c;
        std::vector<int> touched;
        const VertexSet& nb = ctx.g->neighbors(pick);
        for (int u = nb.first(); u >= 0; u = nb.next_after(u)) {
            if (ctx.colors[u] < 0 && !((ctx.forbidden[u] >> c) & 1)) {
                ctx.forbidden[u] |= uint64_t{1} << c;
                touched.push_back(u);
            }
        }
        if (color_step(ctx, remaining - 1)) return true;
        for (int u : touched) ctx.forbidden[u] &= ~(uint64_t{1} << c);
        ctx.colors[pick] = -1;
    }
    return false;
}

}  // namespace

std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& h) {
    std::optional<Embedding> found;
    run_embedding_search(g, h, [&](const Embedding& e) {
        found = e;
        return false;  // stop at the first embedding
    });
    return found;
}

bool is_free(const Graph& g, const Graph& h) {
    return !contains_subgraph(g, h).has_value();
}

void for_each_embedding(const Graph& g, const Graph& h,
                        const std::function<bool(const Embedding&)>& visit) {
    run_embedding_search(g, h, visit);
}

CliqueResult clique_number(const Graph& g) {
    CliqueContext ctx;
    ctx.g = &g;
    clique_expand(ctx, VertexSet{}, 0, g.vertices());
    return {ctx.best, ctx.best_set};
}

CliqueResult independence_number(const Graph& g) {
    return clique_number(complement(g));
}

ChromaticResult chromatic_number(const Graph& g) {
    int n = g.order();
    if (n > 64) throw std::invalid_argument("chromatic_number: order exceeds the 64-vertex budget");
    if (n == 0) return {0, {}};
    if (g.size() == 0) return {1, std::vector<int>(n, 0)};
    CliqueResult clique = clique_number(g);
    for (int k = clique.size; k <= n; ++k) {
        ColorContext ctx;
        ctx.g = &g;
        ctx.k = k;
        ctx.colors.assign(n, -1);
        ctx.forbidden.assign(n, 0);
        // Symmetry break: the first maximum clique takes distinct colors.
        int c = 0, precolored = 0;
        for (int v = clique.witness.first(); v >= 0; v = clique.witness.next_after(v)) {
            ctx.colors[v] = c;
            const VertexSet& nb = g.neighbors(v);
            for (int u = nb.first(); u >= 0; u = nb.next_after(u)) {
                if (ctx.colors[u] < 0) ctx.forbidden[u] |= uint64_t{1} << c;
            }
            ++c;
            ++precolored;
        }
        if (color_step(ctx, n - precolored)) return {k, ctx.colors};
    }
    return {n, {}};  // unreachable: n colors always suffice
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> side(n, -1);
    Bipartition parts;
    for (int start = 0; start < n; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        parts.side0.set(start);
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            const VertexSet& nb = g.neighbors(v);
            for (int u = nb.first(); u >= 0; u = nb.next_after(u)) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    (side[u] == 0 ? parts.side0 : parts.side1).set(u);
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return parts;
}

std::vector<Component> classify_components(const Graph& g) {
    int n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<Component> out;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        VertexSet comp;
        std::vector<int> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            comp.set(v);
            const VertexSet& nb = g.neighbors(v);
            for (int u = nb.first(); u >= 0; u = nb.next_after(u)) {
                if (!seen[u]) {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        Component c;
        c.vertices = comp;
        Graph sub = induced_subgraph(g, comp);
        int order = sub.order();
        bool two_regular = true;
        for (int v = 0; v < order; ++v) {
            if (sub.degree(v) != 2) two_regular = false;
        }
        if (order == 3 && sub.size() == 3) {
            c.kind = ComponentKind::Triangle;
        } else if (two_regular && order % 2 == 1 && order >= 3) {
            c.kind = ComponentKind::OddCycle;
        } else if (auto bip = is_bipartite(sub)) {
            c.kind = ComponentKind::Bipartite;
            // Map the bipartition back to host labels.
            std::vector<int> labels;
            for (int v = comp.first(); v >= 0; v = comp.next_after(v)) labels.push_back(v);
            for (int v = 0; v < order; ++v) {
                (bip->side0.test(v) ? c.parts.side0 : c.parts.side1).set(labels[v]);
            }
        } else {
            c.kind = ComponentKind::Other;
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return classify_components(g).size() <= 1;
}

}  // namespace folkman
