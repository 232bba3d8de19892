#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// Every named graph family used by the workbench, with documented labelings:
///   K n        complete graph
///   C n        cycle, n >= 3
///   P n        path on n vertices
///   STAR k     K_{1,k}, center 0
///   J n        K_n minus edge {0,1}, n >= 2
///   BOOK k     K_1 + K_{1,k}; spine {0,1}, pages 2..k+1
///   WHEEL5     K_1 + C_4; hub 0
///   KHAT n s   K_n on 0..n-1 plus vertex n adjacent to 0..s-1
///   BULL       triangle {0,1,2}, horns 3-0 and 4-1
///   BOWTIE     triangles {0,1,2} and {0,3,4}
///   K1_P4      K_1 + P_4; hub 0, path 1-2-3-4
///   CO_P2P3    complement of P_2 (0,1) union P_3 (2-3-4)
///   K14_PLUS_E K_{1,4} center 0 plus leaf edge {1,2}
///   THEOREM4   the 19-vertex construction (see theorem4_graph)
///   CUBIC_RESIDUE p   difference graph over the nonzero cubes mod p
enum class ConstructionTag {
    Complete,
    Cycle,
    Path,
    Star,
    J,
    Book,
    Wheel5,
    KHat,
    Bull,
    Bowtie,
    K1P4,
    CoP2P3,
    K14PlusE,
    Theorem4,
    CubicResidue,
};

struct ConstructionId {
    ConstructionTag tag;
    std::vector<int> params;
};

Graph construct(const ConstructionId& id);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int k);
Graph j_graph(int n);
Graph book_graph(int k);
Graph wheel5();
Graph khat_graph(int n, int s);
Graph bull_graph();
Graph bowtie_graph();
Graph k1_plus_p4();
Graph co_p2_p3();
Graph k14_plus_e();

/// The 19-vertex, 48-edge host: u = 0 joined to three 5-cycles V_1, V_2, V_3;
/// V_0 = {1,2,3} a triangle whose i-th vertex dominates V_i; V_i occupies
/// {4+5(i-1) .. 8+5(i-1)} with cycle edges between consecutive labels.
Graph theorem4_graph();

/// Difference graph on Z_p over the nonzero cubic residues: {a,b} is an edge
/// iff (a-b) mod p is a cube. Requires p prime, p = 1 (mod 3), p <= 512;
/// anything else is rejected (the residue set would be all of Z_p - {0}).
Graph cubic_residue_graph(int p);

/// The 11 pairwise nonisomorphic connected K_4-free graphs on 5 vertices
/// containing a triangle, generated by filtered exhaustive enumeration,
/// in ascending canonical-code order.
const std::vector<Graph>& five_vertex_catalog();

/// Parse a CLI construction name (case-insensitive) plus integer params.
std::optional<ConstructionId> parse_construction(std::string_view name,
                                                 std::span<const int> params);

/// Parse a short graph token for target/avoid lists: K3, C5, P4, J5, B3, or
/// one of the named 5-vertex graphs (WHEEL5, BULL, BOWTIE, K1_P4, CO_P2P3,
/// K14_PLUS_E, THEOREM4). Falls back to graph6 when the token is not a name.
std::optional<Graph> parse_graph_token(std::string_view token);

std::string construction_name(ConstructionTag tag);

}  // namespace folkman
