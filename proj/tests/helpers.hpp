#pragma once

// Test-only oracles, deliberately independent of the library's search paths:
// naive all-injections subgraph containment, naive clique scan, a brute CNF
// satisfiability check, and an all-permutations canonical form.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "folkman/graph.hpp"

namespace testutil {

inline bool naive_contains_subgraph(const folkman::Graph& g, const folkman::Graph& h) {
    int gn = g.order(), hn = h.order();
    if (hn > gn) return false;
    std::vector<int> idx(gn);
    std::iota(idx.begin(), idx.end(), 0);
    // Every injection = every hn-permutation of g's vertices.
    std::vector<int> pick(hn, -1);
    std::vector<bool> used(gn, false);
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == hn) {
            for (auto [a, b] : h.edges()) {
                if (!g.adjacent(pick[a], pick[b])) return false;
            }
            return true;
        }
        for (int v = 0; v < gn; ++v) {
            if (used[v]) continue;
            used[v] = true;
            pick[pos] = v;
            if (rec(pos + 1)) {
                used[v] = false;
                return true;
            }
            used[v] = false;
        }
        return false;
    };
    return rec(0);
}

inline bool naive_has_clique(const folkman::Graph& g, int k) {
    int n = g.order();
    std::vector<int> members;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (int(members.size()) == k) return true;
        for (int v = from; v < n; ++v) {
            bool ok = true;
            for (int m : members) {
                if (!g.adjacent(m, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            members.push_back(v);
            if (rec(v + 1)) return true;
            members.pop_back();
        }
        return false;
    };
    return rec(0);
}

// Parse a DIMACS CNF string and decide satisfiability by full enumeration.
// Only usable for small variable counts.
inline bool cnf_satisfiable(const std::string& dimacs) {
    std::istringstream in(dimacs);
    std::string token;
    int nvars = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<int> clause;
    bool header = false;
    while (in >> token) {
        if (token == "p") {
            in >> token >> nvars;
            int nclauses;
            in >> nclauses;
            header = true;
            continue;
        }
        if (token == "c") continue;
        int lit = std::stoi(token);
        if (lit == 0) {
            clauses.push_back(clause);
            clause.clear();
        } else {
            clause.push_back(lit);
        }
    }
    if (!header || nvars > 24) throw std::runtime_error("cnf_satisfiable: bad input");
    for (uint64_t mask = 0; mask < (uint64_t{1} << nvars); ++mask) {
        bool all = true;
        for (const auto& c : clauses) {
            bool sat = false;
            for (int lit : c) {
                int var = lit > 0 ? lit : -lit;
                bool value = (mask >> (var - 1)) & 1;
                if ((lit > 0) == value) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

// Canonical form by trying all permutations; independent of the library's
// pruned search.
inline uint64_t naive_canonical_code(const folkman::Graph& g) {
    int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    int bits = n * (n - 1) / 2;
    do {
        uint64_t value = 0;
        for (int v = 1; v < n; ++v) {
            for (int u = 0; u < v; ++u) {
                value = (value << 1) | (g.adjacent(perm[u], perm[v]) ? 1 : 0);
            }
        }
        if (value < best) best = value;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (bits == 0) return 0;
    return best;
}

}  // namespace testutil
