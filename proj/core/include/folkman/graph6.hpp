#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decode one graph6 string (no trailing newline). Throws Graph6Error on a
/// malformed header, truncated bit field, trailing garbage or n > 512.
Graph parse_graph6(std::string_view text);

/// Encode in canonical graph6 form: short header for n < 63, bits in
/// column-major upper-triangle order, zero padding.
std::string emit_graph6(const Graph& g);

/// Newline-delimited multi-graph stream helpers. Blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace folkman
