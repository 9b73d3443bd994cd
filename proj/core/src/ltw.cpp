#include "treeshift/ltw.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "treeshift/treewidth.hpp"

namespace treeshift {

namespace {

VertexSet ball(const Graph& g, Vertex v, int r) {
    auto dist = bfs_distances(g, v);
    VertexSet out;
    for (int u = 0; u < g.n(); ++u)
        if (dist[u] >= 0 && dist[u] <= r) out.push_back(u);
    return out;
}

// Invariant hash for neighborhood dedup: (n, m, sorted degree sequence).
// Collisions only cost a repeated solve, never correctness.
std::string invariant_key(const Graph& g) {
    std::vector<int> degs;
    for (int v = 0; v < g.n(); ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    std::string k = std::to_string(g.n()) + ":" + std::to_string(g.m()) + ":";
    for (int d : degs) k += std::to_string(d) + ",";
    return k;
}

}  // namespace

LtwProfile local_treewidth(const Graph& g, int r_max, LtwMode mode, int ceiling) {
    if (g.n() == 0) throw GraphError("local tree-width of the empty graph is undefined");
    LtwProfile profile;
    for (int r = 0; r <= r_max; ++r) {
        LtwEntry entry;
        entry.radius = r;
        entry.value = -1;
        entry.exact = mode == LtwMode::Exact;
        std::map<std::string, int> seen;
        for (int v = 0; v < g.n(); ++v) {
            auto nb = induced_subgraph(g, ball(g, v, r));
            std::string key = invariant_key(nb.graph);
            int w;
            auto it = seen.find(key);
            if (it != seen.end()) {
                w = it->second;
            } else if (mode == LtwMode::Exact) {
                if (nb.graph.n() > ceiling)
                    throw GraphError("neighborhood of vertex " + std::to_string(v + 1) +
                                     " at radius " + std::to_string(r) +
                                     " exceeds the exact ceiling");
                auto res = exact_treewidth(nb.graph, 50'000'000, ceiling);
                if (!res.exact) entry.exact = false;
                w = res.width;
                seen.emplace(std::move(key), w);
            } else {
                w = width(heuristic_decomposition(nb.graph));
                seen.emplace(std::move(key), w);
            }
            if (w > entry.value) {
                entry.value = w;
                entry.witness = v;
            }
        }
        profile.entries.push_back(entry);
    }
    return profile;
}

LinearBoundReport check_linear_bound(const Graph& g, int lambda, int r_max, LtwMode mode) {
    LinearBoundReport rep;
    rep.lambda = lambda;
    auto profile = local_treewidth(g, r_max, mode);
    for (const auto& e : profile.entries) {
        LinearBoundCheck c;
        c.radius = e.radius;
        c.value = e.value;
        c.bound = lambda * e.radius;
        c.pass = e.value <= c.bound;
        c.witness = e.witness;
        if (!c.pass) rep.all_pass = false;
        rep.checks.push_back(c);
    }
    return rep;
}

std::int64_t valence_bound(int l, int r) {
    if (l < 1 || r < 1) throw GraphError("valence bound needs l >= 1 and r >= 1");
    std::int64_t result = l;
    for (int i = 1; i < r && result != 0; ++i) {
        if (result > std::numeric_limits<std::int64_t>::max() / std::max(l - 1, 1))
            throw GraphError("valence bound overflows 64-bit arithmetic");
        result *= (l - 1);
    }
    return result;
}

}  // namespace treeshift
