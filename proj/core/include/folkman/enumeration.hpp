#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// Canonical form for n <= 11: the lexicographically minimal column-major
/// upper-triangle adjacency bit-string over all vertex permutations, packed
/// into a uint64 with the first bit most significant.
uint64_t canonical_code(const Graph& g);

/// Rebuild the graph encoded by a canonical (or any) packed bit-string.
Graph graph_from_code(int n, uint64_t code);

bool is_isomorphic(const Graph& a, const Graph& b);

/// All isomorphism classes on n vertices, n <= 9, as sorted canonical codes.
/// Built once by single-vertex augmentation with canonical-form dedup and
/// cached for the lifetime of the process.
const std::vector<uint64_t>& nonisomorphic_codes(int n);

/// Stream every isomorphism class on n vertices exactly once, in ascending
/// canonical-code order.
void for_each_nonisomorphic(int n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> nonisomorphic_graphs(int n);

}  // namespace folkman
