#include "folkman/arrowing.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "folkman/invariants.hpp"

namespace folkman {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Constraint-propagation solver. One counter pair per occurrence:
//   same  = elements already given the occurrence's color
//   other = elements given any different color (>=1 means satisfied/dead)
// An alive occurrence with all but one element in its color forces the last
// element away from that color.
// ---------------------------------------------------------------------------

struct Occ {
    int color;
    std::vector<uint32_t> elems;
    int same = 0;
    int other = 0;
};

struct Solver {
    const ArrowingInstance* instance;
    int n_elems;
    int n_colors;
    std::vector<Occ> occs;
    std::vector<std::vector<uint32_t>> occs_of;  // element -> occurrence ids
    std::vector<uint32_t> domain;                // element -> color bitmask
    std::vector<int8_t> assigned;                // element -> color or -1
    int unassigned = 0;
    uint64_t nodes = 0;
    uint64_t max_nodes = 0;
    bool node_limit_hit = false;

    enum class TrailKind : uint8_t { Assign, Domain };
    struct TrailEntry {
        TrailKind kind;
        uint32_t elem;
        uint32_t old_domain;
    };
    std::vector<TrailEntry> trail;

    bool assign(int elem, int color);
    bool remove_color(int elem, int color);
    void undo_to(size_t mark);
    int pick_element() const;
    ArrowingOutcome search(bool diagonal_root);
};

bool Solver::assign(int elem, int color) {
    trail.push_back({TrailKind::Assign, uint32_t(elem), domain[elem]});
    assigned[elem] = int8_t(color);
    domain[elem] = 1u << color;
    --unassigned;
    // Counters first, completely, so undo_to always reverses a full pass.
    bool ok = true;
    for (uint32_t oi : occs_of[elem]) {
        Occ& o = occs[oi];
        if (o.color == color) {
            if (++o.same == int(o.elems.size())) ok = false;  // monochromatic
        } else {
            ++o.other;
        }
    }
    if (!ok) return false;
    for (uint32_t oi : occs_of[elem]) {
        const Occ& o = occs[oi];
        if (o.color != color) continue;
        // Re-read the counters: a cascade from an earlier unit may have
        // satisfied or violated this occurrence already.
        if (o.other != 0 || o.same != int(o.elems.size()) - 1) continue;
        for (uint32_t e : o.elems) {
            if (assigned[e] < 0) {
                if (!remove_color(int(e), o.color)) return false;
                break;
            }
        }
    }
    return true;
}

bool Solver::remove_color(int elem, int color) {
    if (assigned[elem] >= 0) return assigned[elem] != color;
    uint32_t bit = 1u << color;
    if (!(domain[elem] & bit)) return true;
    trail.push_back({TrailKind::Domain, uint32_t(elem), domain[elem]});
    domain[elem] &= ~bit;
    uint32_t left = domain[elem];
    if (left == 0) return false;
    if ((left & (left - 1)) == 0) {
        return assign(elem, std::countr_zero(left));
    }
    return true;
}

void Solver::undo_to(size_t mark) {
    while (trail.size() > mark) {
        TrailEntry e = trail.back();
        trail.pop_back();
        if (e.kind == TrailKind::Assign) {
            int color = assigned[e.elem];
            for (uint32_t oi : occs_of[e.elem]) {
                Occ& o = occs[oi];
                if (o.color == color) {
                    --o.same;
                } else {
                    --o.other;
                }
            }
            assigned[e.elem] = -1;
            ++unassigned;
        }
        domain[e.elem] = e.old_domain;
    }
}

// Most-constrained element: score by alive occurrences weighted toward the
// nearly monochromatic ones; ties break to the lowest index.
int Solver::pick_element() const {
    int best = -1;
    uint64_t best_score = 0;
    for (int e = 0; e < n_elems; ++e) {
        if (assigned[e] >= 0) continue;
        uint64_t score = 1;
        for (uint32_t oi : occs_of[e]) {
            const Occ& o = occs[oi];
            if (o.other > 0) continue;  // satisfied
            int missing = int(o.elems.size()) - o.same;
            score += missing >= 4 ? 1 : (uint64_t{1} << (2 * (4 - missing)));
        }
        if (score > best_score) {
            best_score = score;
            best = e;
        }
    }
    return best;
}

ArrowingOutcome Solver::search(bool diagonal_root) {
    if (unassigned == 0) return ArrowingOutcome::Fails;
    if (++nodes > max_nodes) {
        node_limit_hit = true;
        return ArrowingOutcome::Indeterminate;
    }
    int elem = pick_element();
    // Diagonal symmetry: color permutations fix the constraint system, so the
    // root element only needs color 0.
    int limit = diagonal_root ? 1 : n_colors;
    for (int c = 0; c < limit; ++c) {
        if (!(domain[elem] & (1u << c))) continue;
        size_t mark = trail.size();
        if (assign(elem, c)) {
            ArrowingOutcome sub = search(false);
            if (sub != ArrowingOutcome::Arrows) return sub;
        }
        undo_to(mark);
    }
    return ArrowingOutcome::Arrows;
}

ElementColoring coloring_from_assignment(const ArrowingInstance& instance,
                                         const std::vector<int8_t>& assigned) {
    ElementColoring c;
    c.mode = instance.mode;
    c.colors = instance.color_count();
    c.assign = assigned;
    return c;
}

void check_witness(const ArrowingInstance& instance, const ElementColoring& witness) {
    if (!witness.total() || !is_good_coloring(instance, witness)) {
        throw std::logic_error("arrowing: produced witness failed independent validation");
    }
}

}  // namespace

void ArrowingInstance::validate() const {
    if (targets.size() < 2) {
        throw std::invalid_argument("arrowing: need at least 2 targets (one per color)");
    }
    if (targets.size() > 30) {
        throw std::invalid_argument("arrowing: more than 30 colors is not supported");
    }
    for (const Graph& t : targets) {
        if (t.order() == 0) {
            throw std::invalid_argument("arrowing: empty target");
        }
        if (mode == ArrowingMode::Edge && t.size() == 0) {
            throw std::invalid_argument("arrowing: edge-mode target without edges");
        }
    }
}

std::string ElementColoring::to_string() const {
    std::string s;
    s.reserve(assign.size());
    for (int8_t c : assign) {
        if (c < 0) {
            s.push_back('.');
        } else if (c < 10) {
            s.push_back(char('0' + c));
        } else {
            s.push_back(char('a' + c - 10));
        }
    }
    return s;
}

OccurrenceSet enumerate_occurrences(const ArrowingInstance& instance, size_t cap) {
    instance.validate();
    OccurrenceSet result;
    result.by_color.resize(instance.targets.size());
    size_t total = 0;
    for (size_t color = 0; color < instance.targets.size(); ++color) {
        const Graph& target = instance.targets[color];
        // Identical targets share one enumeration.
        bool copied = false;
        for (size_t prev = 0; prev < color; ++prev) {
            if (instance.targets[prev] == target) {
                result.by_color[color] = result.by_color[prev];
                total += result.by_color[color].size();
                copied = true;
                break;
            }
        }
        if (copied) {
            if (total > cap) throw std::length_error("occurrence cap exceeded");
            continue;
        }
        std::set<std::vector<uint32_t>> seen;
        for_each_embedding(instance.host, target, [&](const Embedding& phi) {
            std::vector<uint32_t> elems;
            if (instance.mode == ArrowingMode::Vertex) {
                elems.reserve(phi.size());
                for (int gv : phi) elems.push_back(uint32_t(gv));
            } else {
                elems.reserve(target.edges().size());
                for (auto [hu, hv] : target.edges()) {
                    elems.push_back(uint32_t(instance.host.edge_index(phi[hu], phi[hv])));
                }
            }
            std::sort(elems.begin(), elems.end());
            if (seen.insert(std::move(elems)).second) {
                if (++total > cap) throw std::length_error("occurrence cap exceeded");
            }
            return true;
        });
        result.by_color[color].assign(seen.begin(), seen.end());
    }
    return result;
}

Verdict arrows(const ArrowingInstance& instance, const SolveLimits& limits) {
    auto start = Clock::now();
    instance.validate();
    OccurrenceSet occ = enumerate_occurrences(instance, limits.occurrence_cap);

    Solver solver;
    solver.instance = &instance;
    solver.n_elems = instance.element_count();
    solver.n_colors = instance.color_count();
    solver.max_nodes = limits.max_nodes;
    for (size_t color = 0; color < occ.by_color.size(); ++color) {
        for (const auto& elems : occ.by_color[color]) {
            solver.occs.push_back({int(color), elems, 0, 0});
        }
    }
    solver.occs_of.assign(solver.n_elems, {});
    for (uint32_t oi = 0; oi < solver.occs.size(); ++oi) {
        for (uint32_t e : solver.occs[oi].elems) solver.occs_of[e].push_back(oi);
    }
    solver.domain.assign(solver.n_elems, (uint32_t{1} << solver.n_colors) - 1);
    solver.assigned.assign(solver.n_elems, -1);
    solver.unassigned = solver.n_elems;

    bool diagonal = true;
    for (size_t c = 1; c < occ.by_color.size() && diagonal; ++c) {
        diagonal = occ.by_color[c] == occ.by_color[0];
    }

    // Root propagation: size-1 occurrences are unconditional exclusions.
    Verdict verdict;
    bool root_conflict = false;
    for (const Occ& o : solver.occs) {
        if (o.elems.size() == 1 && !solver.remove_color(int(o.elems[0]), o.color)) {
            root_conflict = true;
            break;
        }
    }
    if (root_conflict) {
        verdict.outcome = ArrowingOutcome::Arrows;
    } else if (solver.unassigned == 0) {
        verdict.outcome = ArrowingOutcome::Fails;
        verdict.witness = coloring_from_assignment(instance, solver.assigned);
    } else {
        verdict.outcome = solver.search(diagonal);
        if (verdict.outcome == ArrowingOutcome::Fails) {
            verdict.witness = coloring_from_assignment(instance, solver.assigned);
        }
    }
    if (verdict.witness) check_witness(instance, *verdict.witness);
    verdict.stats.nodes = solver.nodes;
    verdict.stats.millis = elapsed_ms(start);
    return verdict;
}

Verdict arrows_bruteforce(const ArrowingInstance& instance) {
    auto start = Clock::now();
    instance.validate();
    int k = instance.element_count();
    int r = instance.color_count();
    double combos = std::pow(double(r), double(k));
    if (combos > double(uint64_t{1} << 26)) {
        throw std::invalid_argument("arrows_bruteforce: r^elements exceeds 2^26");
    }
    OccurrenceSet occ = enumerate_occurrences(instance);

    Verdict verdict;
    std::vector<int8_t> colors(k, 0);
    uint64_t tried = 0;
    while (true) {
        ++tried;
        bool mono = false;
        for (int color = 0; color < r && !mono; ++color) {
            for (const auto& elems : occ.by_color[color]) {
                bool all = true;
                for (uint32_t e : elems) {
                    if (colors[e] != color) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    mono = true;
                    break;
                }
            }
        }
        if (!mono) {
            verdict.outcome = ArrowingOutcome::Fails;
            ElementColoring witness;
            witness.mode = instance.mode;
            witness.colors = r;
            witness.assign = colors;
            verdict.witness = std::move(witness);
            break;
        }
        // Odometer step.
        int pos = 0;
        while (pos < k && ++colors[pos] == r) {
            colors[pos] = 0;
            ++pos;
        }
        if (pos == k) {
            verdict.outcome = ArrowingOutcome::Arrows;
            break;
        }
    }
    if (verdict.witness) check_witness(instance, *verdict.witness);
    verdict.stats.nodes = tried;
    verdict.stats.millis = elapsed_ms(start);
    return verdict;
}

bool is_good_coloring(const ArrowingInstance& instance, const ElementColoring& coloring) {
    instance.validate();
    if (int(coloring.assign.size()) != instance.element_count()) {
        throw std::invalid_argument("coloring length does not match the instance");
    }
    const Graph& host = instance.host;
    for (int color = 0; color < instance.color_count(); ++color) {
        Graph restricted;
        if (instance.mode == ArrowingMode::Vertex) {
            VertexSet keep;
            for (int v = 0; v < host.order(); ++v) {
                if (coloring.assign[v] == color) keep.set(v);
            }
            restricted = induced_subgraph(host, keep);
        } else {
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < host.size(); ++e) {
                if (coloring.assign[e] == color) edges.push_back(host.edge_at(e));
            }
            restricted = Graph(host.order(), edges);
        }
        if (contains_subgraph(restricted, instance.targets[color])) return false;
    }
    return true;
}

std::string export_cnf(const ArrowingInstance& instance, size_t cap) {
    instance.validate();
    OccurrenceSet occ = enumerate_occurrences(instance, cap);
    int k = instance.element_count();
    int r = instance.color_count();
    std::ostringstream out;
    if (r == 2) {
        size_t clauses = occ.total();
        out << "p cnf " << k << ' ' << clauses << '\n';
        for (int color = 0; color < 2; ++color) {
            for (const auto& elems : occ.by_color[color]) {
                for (uint32_t e : elems) {
                    // true = color 0; forbid all-color-0 with negatives.
                    out << (color == 0 ? -(int(e) + 1) : int(e) + 1) << ' ';
                }
                out << "0\n";
            }
        }
    } else {
        auto var = [r](int elem, int color) { return elem * r + color + 1; };
        size_t clauses = occ.total() + size_t(k) + size_t(k) * r * (r - 1) / 2;
        out << "p cnf " << k * r << ' ' << clauses << '\n';
        for (int e = 0; e < k; ++e) {
            for (int c = 0; c < r; ++c) out << var(e, c) << ' ';
            out << "0\n";
            for (int c1 = 0; c1 < r; ++c1) {
                for (int c2 = c1 + 1; c2 < r; ++c2) {
                    out << -var(e, c1) << ' ' << -var(e, c2) << " 0\n";
                }
            }
        }
        for (int color = 0; color < r; ++color) {
            for (const auto& elems : occ.by_color[color]) {
                for (uint32_t e : elems) out << -var(int(e), color) << ' ';
                out << "0\n";
            }
        }
    }
    return out.str();
}

ElementColoring decode_model(const ArrowingInstance& instance, std::string_view model_text) {
    instance.validate();
    int k = instance.element_count();
    int r = instance.color_count();
    int nvars = r == 2 ? k : k * r;

    std::vector<int> seen(nvars + 1, 0);  // +1 true, -1 false
    std::istringstream in{std::string(model_text)};
    std::string token;
    while (in >> token) {
        if (token == "v" || token == "s" || token == "SAT" || token == "SATISFIABLE") continue;
        long lit;
        try {
            lit = std::stol(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("decode_model: unparsable token '" + token + "'");
        }
        if (lit == 0) continue;
        long v = lit > 0 ? lit : -lit;
        if (v > nvars) {
            throw std::invalid_argument("decode_model: variable " + std::to_string(v) +
                                        " exceeds the " + std::to_string(nvars) +
                                        "-variable encoding");
        }
        seen[size_t(v)] = lit > 0 ? 1 : -1;
    }
    for (int v = 1; v <= nvars; ++v) {
        if (seen[size_t(v)] == 0) {
            throw std::invalid_argument("decode_model: variable " + std::to_string(v) +
                                        " missing from the model");
        }
    }

    ElementColoring coloring;
    coloring.mode = instance.mode;
    coloring.colors = r;
    coloring.assign.assign(size_t(k), -1);
    if (r == 2) {
        for (int e = 0; e < k; ++e) coloring.assign[size_t(e)] = seen[size_t(e) + 1] > 0 ? 0 : 1;
    } else {
        for (int e = 0; e < k; ++e) {
            int chosen = -1;
            for (int c = 0; c < r; ++c) {
                if (seen[size_t(e * r + c + 1)] > 0) {
                    if (chosen >= 0) {
                        throw std::invalid_argument(
                            "decode_model: exactly-one violated at element " + std::to_string(e));
                    }
                    chosen = c;
                }
            }
            if (chosen < 0) {
                throw std::invalid_argument("decode_model: element " + std::to_string(e) +
                                            " has no color");
            }
            coloring.assign[size_t(e)] = int8_t(chosen);
        }
    }
    if (!is_good_coloring(instance, coloring)) {
        throw std::invalid_argument("decode_model: model does not avoid all targets");
    }
    return coloring;
}

}  // namespace folkman
