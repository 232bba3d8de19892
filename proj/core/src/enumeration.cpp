#include "folkman/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "folkman/invariants.hpp"

namespace folkman {

namespace {

constexpr int kMaxCanonOrder = 11;  // C(11,2) = 55 bits fits a uint64
constexpr int kMaxEnumOrder = 9;

struct CanonContext {
    int n = 0;
    int total_bits = 0;
    uint16_t adj[kMaxCanonOrder];
    int perm[kMaxCanonOrder];
    uint64_t best = ~uint64_t{0};
};

// Place host vertices into canonical positions one at a time. The bits a new
// vertex appends are its adjacencies to the already-placed prefix, which is
// exactly one column of the column-major upper triangle, so prefixes compare
// directly against the best full string found so far.
void canon_step(CanonContext& ctx, int pos, uint16_t used, uint64_t value, int bits) {
    if (pos == ctx.n) {
        if (value < ctx.best) ctx.best = value;
        return;
    }
    struct Option {
        uint64_t appended;
        int vertex;
    };
    Option options[kMaxCanonOrder];
    int count = 0;
    for (int v = 0; v < ctx.n; ++v) {
        if ((used >> v) & 1) continue;
        uint64_t appended = 0;
        for (int i = 0; i < pos; ++i) {
            appended = (appended << 1) | ((ctx.adj[v] >> ctx.perm[i]) & 1);
        }
        options[count++] = {appended, v};
    }
    std::sort(options, options + count, [](const Option& a, const Option& b) {
        return a.appended != b.appended ? a.appended < b.appended : a.vertex < b.vertex;
    });
    int new_bits = bits + pos;
    for (int i = 0; i < count; ++i) {
        uint64_t new_value = (value << pos) | options[i].appended;
        if (new_value > (ctx.best >> (ctx.total_bits - new_bits))) break;  // sorted: all worse
        ctx.perm[pos] = options[i].vertex;
        canon_step(ctx, pos + 1, uint16_t(used | (1u << options[i].vertex)), new_value, new_bits);
    }
}

std::vector<uint64_t> augment_level(int n, const std::vector<uint64_t>& prev, unsigned jobs) {
    // Extend every (n-1)-vertex class by one vertex over all neighbor subsets,
    // dedup by canonical code.
    const uint32_t subsets = uint32_t{1} << (n - 1);
    std::mutex merge_mutex;
    std::unordered_set<uint64_t> seen;
    auto worker = [&](size_t begin, size_t end) {
        std::unordered_set<uint64_t> local;
        for (size_t idx = begin; idx < end; ++idx) {
            Graph parent = graph_from_code(n - 1, prev[idx]);
            CanonContext ctx;
            ctx.n = n;
            ctx.total_bits = n * (n - 1) / 2;
            for (int v = 0; v < n; ++v) ctx.adj[v] = 0;
            for (auto [u, v] : parent.edges()) {
                ctx.adj[u] |= uint16_t(1u << v);
                ctx.adj[v] |= uint16_t(1u << u);
            }
            for (uint32_t mask = 0; mask < subsets; ++mask) {
                CanonContext run = ctx;
                run.adj[n - 1] = uint16_t(mask);
                for (int v = 0; v < n - 1; ++v) {
                    if ((mask >> v) & 1) run.adj[v] |= uint16_t(1u << (n - 1));
                }
                canon_step(run, 0, 0, 0, 0);
                local.insert(run.best);
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        seen.merge(local);
    };
    if (jobs <= 1 || prev.size() < 2 * jobs) {
        worker(0, prev.size());
    } else {
        std::vector<std::thread> threads;
        size_t chunk = (prev.size() + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            size_t begin = t * chunk;
            size_t end = std::min(prev.size(), begin + chunk);
            if (begin >= end) break;
            threads.emplace_back(worker, begin, end);
        }
        for (auto& th : threads) th.join();
    }
    std::vector<uint64_t> codes(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
    return codes;
}

}  // namespace

uint64_t canonical_code(const Graph& g) {
    if (g.order() > kMaxCanonOrder) {
        throw std::invalid_argument("canonical_code: order exceeds " +
                                    std::to_string(kMaxCanonOrder));
    }
    CanonContext ctx;
    ctx.n = g.order();
    ctx.total_bits = ctx.n * (ctx.n - 1) / 2;
    if (ctx.n <= 1) return 0;
    for (int v = 0; v < ctx.n; ++v) ctx.adj[v] = 0;
    for (auto [u, v] : g.edges()) {
        ctx.adj[u] |= uint16_t(1u << v);
        ctx.adj[v] |= uint16_t(1u << u);
    }
    canon_step(ctx, 0, 0, 0, 0);
    return ctx.best;
}

Graph graph_from_code(int n, uint64_t code) {
    int total_bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if ((code >> (total_bits - 1 - bit)) & 1) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.order() <= kMaxCanonOrder) return canonical_code(a) == canonical_code(b);
    // Equal order and size: one embedding direction settles it.
    return contains_subgraph(a, b).has_value();
}

const std::vector<uint64_t>& nonisomorphic_codes(int n) {
    if (n < 1 || n > kMaxEnumOrder) {
        throw std::invalid_argument("nonisomorphic_codes: order must be in [1, " +
                                    std::to_string(kMaxEnumOrder) + "]");
    }
    static std::mutex cache_mutex;
    static std::map<int, std::vector<uint64_t>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    if (cache.find(1) == cache.end()) cache[1] = {0};
    int have = 1;
    while (cache.find(have + 1) != cache.end()) ++have;
    for (int level = have; level < n; ++level) {
        unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
        cache[level + 1] = augment_level(level + 1, cache[level], jobs);
    }
    return cache[n];
}

void for_each_nonisomorphic(int n, const std::function<void(const Graph&)>& visit) {
    for (uint64_t code : nonisomorphic_codes(n)) visit(graph_from_code(n, code));
}

std::vector<Graph> nonisomorphic_graphs(int n) {
    std::vector<Graph> graphs;
    for_each_nonisomorphic(n, [&](const Graph& g) { graphs.push_back(g); });
    return graphs;
}

}  // namespace folkman
