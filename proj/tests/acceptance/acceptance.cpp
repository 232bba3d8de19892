// Acceptance suite: every bound, construction and coloring procedure the
// workbench claims to reproduce, one pass/fail line per criterion. Exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/constructions.hpp"
#include "folkman/enumeration.hpp"
#include "folkman/extension.hpp"
#include "folkman/graph6.hpp"
#include "folkman/invariants.hpp"
#include "folkman/verify.hpp"

#include "../helpers.hpp"

using namespace folkman;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::function<bool(std::string&)> run;
};

bool claim_passes(const std::string& id, std::string& note) {
    VerifyOptions options;
    options.jobs = 0;
    ClaimResult result = run_claim(id, options);
    for (const auto& [key, value] : result.details) {
        if (!note.empty()) note += ' ';
        note += key + "=" + value;
    }
    return result.pass;
}

// 1. F_v(2,2;3) = 5.
bool criterion1(std::string& note) {
    return claim_passes("FV223", note);
}

// 2. The 19-vertex host: order, size, freeness, vertex arrowing.
bool criterion2(std::string& note) {
    return claim_passes("T4", note);
}

// 3. R(3,3) boundary with validated witness and oracle agreement.
bool criterion3(std::string& note) {
    Graph k3 = complete_graph(3);
    ArrowingInstance k6{complete_graph(6), ArrowingMode::Edge, {k3, k3}};
    ArrowingInstance k5{complete_graph(5), ArrowingMode::Edge, {k3, k3}};
    Verdict k6v = arrows(k6);
    Verdict k5v = arrows(k5);
    note = "K6=" + std::string(k6v.outcome == ArrowingOutcome::Arrows ? "arrows" : "BAD") +
           " K5=" + std::string(k5v.outcome == ArrowingOutcome::Fails ? "fails" : "BAD");
    if (k6v.outcome != ArrowingOutcome::Arrows) return false;
    if (k5v.outcome != ArrowingOutcome::Fails || !k5v.witness) return false;
    if (!is_good_coloring(k5, *k5v.witness)) return false;
    if (arrows_bruteforce(k6).outcome != ArrowingOutcome::Arrows) return false;
    if (arrows_bruteforce(k5).outcome != ArrowingOutcome::Fails) return false;
    return true;
}

// 4. F_e(K_3,K_3;B_k) = 6 for k >= 5.
bool criterion4(std::string& note) {
    return claim_passes("FE33B5", note);
}

// 5. Constructive nonexistence for B_3-free hosts through order 8.
bool criterion5(std::string& note) {
    return claim_passes("T5", note);
}

// 6. Constructive nonexistence for (K_1+P_4)-free hosts through order 8.
bool criterion6(std::string& note) {
    return claim_passes("T8", note);
}

// 7. J_3-free graphs are bipartite; J_4-free graphs admit the direct coloring.
bool criterion7(std::string& note) {
    std::string j3note, j4note;
    bool a = claim_passes("OBS-J3", j3note);
    bool b = claim_passes("OBS-J4", j4note);
    note = j3note + " " + j4note;
    return a && b;
}

// 8. K_4 deletion pipeline with triangle locality.
bool criterion8(std::string& note) {
    return claim_passes("L7", note);
}

// 9. The cubic-residue host's stated parameters.
bool criterion9(std::string& note) {
    return claim_passes("G127-PROPS", note);
}

// 10. The 5-vertex catalog: 11 members, 8 eliminated through K_1+P_4,
// leaving B_3, W_5 and the complement of P_2 union P_3.
bool criterion10(std::string& note) {
    const std::vector<Graph>& catalog = five_vertex_catalog();
    note = "members=" + std::to_string(catalog.size());
    if (catalog.size() != 11) return false;
    Graph host = k1_plus_p4();
    std::vector<Graph> survivors;
    int eliminated = 0;
    for (const Graph& h : catalog) {
        if (contains_subgraph(host, h)) {
            ++eliminated;
        } else {
            survivors.push_back(h);
        }
    }
    note += " eliminated=" + std::to_string(eliminated);
    if (eliminated != 8 || survivors.size() != 3) return false;
    bool b3 = false, w5 = false, co = false;
    for (const Graph& h : survivors) {
        b3 = b3 || is_isomorphic(h, book_graph(3));
        w5 = w5 || is_isomorphic(h, wheel5());
        co = co || is_isomorphic(h, co_p2_p3());
    }
    note += std::string(" survivors=") + (b3 ? "B3," : "") + (w5 ? "W5," : "") +
            (co ? "coP2P3" : "");
    return b3 && w5 && co;
}

// 11. Solver, brute-force oracle and CNF export agree on the small families.
bool criterion11(std::string& note) {
    Graph k3 = complete_graph(3);
    uint64_t vertex_checked = 0, edge_checked = 0, cnf_checked = 0;
    for (int n = 1; n <= 7; ++n) {
        bool ok = true;
        for_each_nonisomorphic(n, [&](const Graph& g) {
            ArrowingInstance instance{g, ArrowingMode::Vertex, {k3, k3}};
            if (arrows(instance).outcome != arrows_bruteforce(instance).outcome) ok = false;
            ++vertex_checked;
        });
        if (!ok) {
            note = "vertex-mode disagreement at n=" + std::to_string(n);
            return false;
        }
    }
    for (int n = 1; n <= 5; ++n) {
        bool ok = true;
        for_each_nonisomorphic(n, [&](const Graph& g) {
            ArrowingInstance instance{g, ArrowingMode::Edge, {k3, k3}};
            Verdict fast = arrows(instance);
            Verdict brute = arrows_bruteforce(instance);
            if (fast.outcome != brute.outcome) ok = false;
            ++edge_checked;
            // CNF equivalence: the encoding is satisfiable exactly when the
            // instance fails, checked by independent assignment enumeration.
            if (g.size() > 0) {
                bool sat = testutil::cnf_satisfiable(export_cnf(instance));
                if (sat != (brute.outcome == ArrowingOutcome::Fails)) ok = false;
                ++cnf_checked;
            }
        });
        if (!ok) {
            note = "edge-mode disagreement at n=" + std::to_string(n);
            return false;
        }
    }
    note = "vertex_checked=" + std::to_string(vertex_checked) +
           " edge_checked=" + std::to_string(edge_checked) +
           " cnf_checked=" + std::to_string(cnf_checked);
    return true;
}

// 12. Sampled two-coloring contract at s = 3, k = 3.
bool criterion12(std::string& note) {
    return claim_passes("C12-SMALL", note);
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "F_v(2,2;3) = 5: no arrowing through order 4, C_5 arrows at 5", criterion1},
        {2, "19-vertex host: 48 edges, K_4- and B_3-free, arrows (3,3)^v", criterion2},
        {3, "R(3,3) boundary: K_6 arrows (3,3)^e, K_5 fails with valid witness", criterion3},
        {4, "F_e(K_3,K_3;B_5) = 6: nothing through order 5, B_5-free K_6 arrows", criterion4},
        {5, "every connected B_3-free graph to order 8 gets a good coloring", criterion5},
        {6, "every connected (K_1+P_4)-free graph to order 8 gets a good coloring", criterion6},
        {7, "J_3-free graphs bipartite; J_4-free graphs directly colorable, order 8", criterion7},
        {8, "K_4-deletion pipeline: locality and lifted colorings, order 8", criterion8},
        {9, "cubic-residue host: 42-regular, cl 3, alpha 11, B_12-free, has B_11", criterion9},
        {10, "5-vertex catalog: 11 members, 8 eliminated, 3 survivors", criterion10},
        {11, "solver = brute force (vertex n<=7, edge n<=5) and CNF agreement", criterion11},
        {12, "two-coloring contract over 1000 seeded instances", criterion12},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string note;
        bool pass = false;
        try {
            pass = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%2d] %s  %s (%.2f s)%s%s\n", c.number, pass ? "PASS" : "FAIL",
                    c.description.c_str(), secs, note.empty() ? "" : "  ", note.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures) {
        std::printf("acceptance: %d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
}
