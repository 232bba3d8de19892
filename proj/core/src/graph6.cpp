#include "folkman/graph6.hpp"

#include <istream>
#include <ostream>

namespace folkman {

namespace {

constexpr int kLo = 63;   // '?', value 0
constexpr int kHi = 126;  // '~', header escape

int chunk_value(char c) {
    if (c < kLo || c > kHi) throw Graph6Error("graph6: byte out of printable range");
    return c - kLo;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error("graph6: empty string");
    size_t pos = 0;
    long n;
    if (text[0] == char(kHi)) {
        if (text.size() >= 2 && text[1] == char(kHi)) {
            throw Graph6Error("graph6: 8-byte order header not supported (n > 258047)");
        }
        if (text.size() < 4) throw Graph6Error("graph6: truncated order header");
        n = (long(chunk_value(text[1])) << 12) | (long(chunk_value(text[2])) << 6) |
            long(chunk_value(text[3]));
        pos = 4;
    } else {
        n = chunk_value(text[0]);
        pos = 1;
    }
    if (n > Graph::max_order) {
        throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds 512");
    }
    long nbits = n * (n - 1) / 2;
    size_t nbytes = size_t((nbits + 5) / 6);
    if (text.size() - pos < nbytes) throw Graph6Error("graph6: truncated bit field");
    if (text.size() - pos > nbytes) throw Graph6Error("graph6: trailing garbage");

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int value = chunk_value(text[pos + size_t(bit / 6)]);
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits past the triangle must be zero.
    for (long b = nbits; b < long(nbytes) * 6; ++b) {
        int value = chunk_value(text[pos + size_t(b / 6)]);
        if ((value >> (5 - b % 6)) & 1) throw Graph6Error("graph6: nonzero padding bits");
    }
    return Graph(int(n), edges);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    int n = g.order();
    if (n < 63) {
        out.push_back(char(n + kLo));
    } else {
        out.push_back(char(kHi));
        out.push_back(char(((n >> 12) & 63) + kLo));
        out.push_back(char(((n >> 6) & 63) + kLo));
        out.push_back(char((n & 63) + kLo));
    }
    long nbits = long(n) * (n - 1) / 2;
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(acc + kLo));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(char((acc << (6 - filled)) + kLo));
    (void)nbits;
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const Graph& g : graphs) out << emit_graph6(g) << '\n';
}

}  // namespace folkman
