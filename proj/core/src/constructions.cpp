#include "folkman/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>

#include "folkman/enumeration.hpp"
#include "folkman/graph6.hpp"
#include "folkman/invariants.hpp"

namespace folkman {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

void expect_arity(const ConstructionId& id, size_t arity) {
    require(id.params.size() == arity,
            construction_name(id.tag) + ": expected " + std::to_string(arity) +
                " parameter(s), got " + std::to_string(id.params.size()));
}

}  // namespace

Graph complete_graph(int n) {
    require(n >= 0, "K: order must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3, "C: cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    require(n >= 1, "P: path needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph star_graph(int k) {
    require(k >= 0, "STAR: leaf count must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= k; ++v) edges.emplace_back(0, v);
    return Graph(k + 1, edges);
}

Graph j_graph(int n) {
    require(n >= 2, "J: needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (u == 0 && v == 1) continue;  // the missing edge
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph book_graph(int k) {
    require(k >= 1, "BOOK: needs k >= 1");
    return join(complete_graph(1), star_graph(k));
}

Graph wheel5() {
    return join(complete_graph(1), cycle_graph(4));
}

Graph khat_graph(int n, int s) {
    require(n >= 1 && s >= 0 && s <= n, "KHAT: needs 0 <= s <= n");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    }
    for (int u = 0; u < s; ++u) edges.emplace_back(u, n);
    return Graph(n + 1, edges);
}

Graph bull_graph() {
    return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
}

Graph bowtie_graph() {
    return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

Graph k1_plus_p4() {
    return join(complete_graph(1), path_graph(4));
}

Graph co_p2_p3() {
    return complement(disjoint_union(path_graph(2), path_graph(3)));
}

Graph k14_plus_e() {
    return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}});
}

Graph theorem4_graph() {
    std::vector<std::pair<int, int>> edges;
    // V_0 = {1,2,3} induces a triangle.
    edges.insert(edges.end(), {{1, 2}, {1, 3}, {2, 3}});
    for (int i = 1; i <= 3; ++i) {
        int base = 4 + 5 * (i - 1);
        for (int j = 0; j < 5; ++j) {
            edges.emplace_back(base + j, base + (j + 1) % 5);  // C_5 on V_i
            edges.emplace_back(0, base + j);                   // u dominates V_i
            edges.emplace_back(i, base + j);                   // v_i dominates V_i
        }
    }
    return Graph(19, edges);
}

Graph cubic_residue_graph(int p) {
    require(p <= Graph::max_order, "CUBIC_RESIDUE: p exceeds 512");
    require(is_prime(p) && p % 3 == 1,
            "CUBIC_RESIDUE: p must be a prime congruent to 1 mod 3; otherwise every nonzero "
            "residue is a cube and the graph degenerates to K_p");
    std::vector<bool> cube(p, false);
    for (long x = 1; x < p; ++x) cube[size_t(x * x % p * x % p)] = true;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < p; ++v) {
        for (int u = 0; u < v; ++u) {
            if (cube[size_t(v - u)]) edges.emplace_back(u, v);
        }
    }
    return Graph(p, edges);
}

const std::vector<Graph>& five_vertex_catalog() {
    static std::once_flag once;
    static std::vector<Graph> catalog;
    std::call_once(once, [] {
        for_each_nonisomorphic(5, [&](const Graph& g) {
            if (!is_connected(g)) return;
            if (clique_number(g).size != 3) return;
            catalog.push_back(g);
        });
    });
    return catalog;
}

Graph construct(const ConstructionId& id) {
    switch (id.tag) {
        case ConstructionTag::Complete:
            expect_arity(id, 1);
            return complete_graph(id.params[0]);
        case ConstructionTag::Cycle:
            expect_arity(id, 1);
            return cycle_graph(id.params[0]);
        case ConstructionTag::Path:
            expect_arity(id, 1);
            return path_graph(id.params[0]);
        case ConstructionTag::Star:
            expect_arity(id, 1);
            return star_graph(id.params[0]);
        case ConstructionTag::J:
            expect_arity(id, 1);
            return j_graph(id.params[0]);
        case ConstructionTag::Book:
            expect_arity(id, 1);
            return book_graph(id.params[0]);
        case ConstructionTag::Wheel5:
            expect_arity(id, 0);
            return wheel5();
        case ConstructionTag::KHat:
            expect_arity(id, 2);
            return khat_graph(id.params[0], id.params[1]);
        case ConstructionTag::Bull:
            expect_arity(id, 0);
            return bull_graph();
        case ConstructionTag::Bowtie:
            expect_arity(id, 0);
            return bowtie_graph();
        case ConstructionTag::K1P4:
            expect_arity(id, 0);
            return k1_plus_p4();
        case ConstructionTag::CoP2P3:
            expect_arity(id, 0);
            return co_p2_p3();
        case ConstructionTag::K14PlusE:
            expect_arity(id, 0);
            return k14_plus_e();
        case ConstructionTag::Theorem4:
            expect_arity(id, 0);
            return theorem4_graph();
        case ConstructionTag::CubicResidue:
            expect_arity(id, 1);
            return cubic_residue_graph(id.params[0]);
    }
    throw std::invalid_argument("construct: unknown tag");
}

std::string construction_name(ConstructionTag tag) {
    switch (tag) {
        case ConstructionTag::Complete: return "K";
        case ConstructionTag::Cycle: return "C";
        case ConstructionTag::Path: return "P";
        case ConstructionTag::Star: return "STAR";
        case ConstructionTag::J: return "J";
        case ConstructionTag::Book: return "BOOK";
        case ConstructionTag::Wheel5: return "WHEEL5";
        case ConstructionTag::KHat: return "KHAT";
        case ConstructionTag::Bull: return "BULL";
        case ConstructionTag::Bowtie: return "BOWTIE";
        case ConstructionTag::K1P4: return "K1_P4";
        case ConstructionTag::CoP2P3: return "CO_P2P3";
        case ConstructionTag::K14PlusE: return "K14_PLUS_E";
        case ConstructionTag::Theorem4: return "THEOREM4";
        case ConstructionTag::CubicResidue: return "CUBIC_RESIDUE";
    }
    return "?";
}

std::optional<ConstructionId> parse_construction(std::string_view name,
                                                 std::span<const int> params) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return char(std::toupper(c)); });
    static const std::pair<const char*, ConstructionTag> tags[] = {
        {"K", ConstructionTag::Complete},
        {"C", ConstructionTag::Cycle},
        {"P", ConstructionTag::Path},
        {"STAR", ConstructionTag::Star},
        {"J", ConstructionTag::J},
        {"BOOK", ConstructionTag::Book},
        {"B", ConstructionTag::Book},
        {"WHEEL5", ConstructionTag::Wheel5},
        {"W5", ConstructionTag::Wheel5},
        {"KHAT", ConstructionTag::KHat},
        {"BULL", ConstructionTag::Bull},
        {"BOWTIE", ConstructionTag::Bowtie},
        {"K1_P4", ConstructionTag::K1P4},
        {"K1P4", ConstructionTag::K1P4},
        {"CO_P2P3", ConstructionTag::CoP2P3},
        {"COP2P3", ConstructionTag::CoP2P3},
        {"K14_PLUS_E", ConstructionTag::K14PlusE},
        {"K14E", ConstructionTag::K14PlusE},
        {"THEOREM4", ConstructionTag::Theorem4},
        {"CUBIC_RESIDUE", ConstructionTag::CubicResidue},
        {"G127", ConstructionTag::CubicResidue},
    };
    for (auto [key, tag] : tags) {
        if (upper == key) {
            ConstructionId id{tag, {params.begin(), params.end()}};
            if (upper == "G127" && params.empty()) id.params = {127};
            return id;
        }
    }
    return std::nullopt;
}

std::optional<Graph> parse_graph_token(std::string_view token) {
    // NAME<digits> forms first: K3, C5, P4, J5, B3.
    if (!token.empty()) {
        size_t digits = 0;
        while (digits < token.size() && std::isdigit(static_cast<unsigned char>(token[token.size() - 1 - digits]))) {
            ++digits;
        }
        if (digits > 0 && digits < token.size()) {
            std::string_view name = token.substr(0, token.size() - digits);
            int value = std::stoi(std::string(token.substr(token.size() - digits)));
            std::string upper(name);
            std::transform(upper.begin(), upper.end(), upper.begin(),
                           [](unsigned char c) { return char(std::toupper(c)); });
            if (upper == "K") return complete_graph(value);
            if (upper == "C") return cycle_graph(value);
            if (upper == "P") return path_graph(value);
            if (upper == "J") return j_graph(value);
            if (upper == "B") return book_graph(value);
        }
        if (auto id = parse_construction(token, {})) {
            try {
                return construct(*id);
            } catch (const std::invalid_argument&) {
                // fall through to graph6
            }
        }
    }
    try {
        return parse_graph6(token);
    } catch (const Graph6Error&) {
        return std::nullopt;
    }
}

}  // namespace folkman
