#include "treeshift/sqrtdecomp.hpp"

#include <algorithm>
#include <cmath>

#include "treeshift/treewidth.hpp"

namespace treeshift {

IntervalSplit split_levels(const BfsLayers& layers, int lambda, int n) {
    IntervalSplit split;
    split.threshold_sq = static_cast<long long>(lambda) * n;
    for (const auto& lvl : layers.levels)
        split.level_sizes.push_back(static_cast<int>(lvl.size()));
    const int m = static_cast<int>(split.level_sizes.size());
    for (int j = 0; j < m;) {
        bool heavy = !split.is_light(j);
        int hi = j;
        while (hi + 1 < m && !split.is_light(hi + 1) == heavy) ++hi;
        split.intervals.push_back({j, hi, heavy});
        j = hi + 1;
    }
    return split;
}

namespace {

int isqrt_floor(long long x) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return static_cast<int>(r);
}

}  // namespace

SqrtReport sqrt_decomposition(const Graph& g, int lambda, Vertex v,
                              const InnerProvider& inner) {
    g.check_vertex(v);
    auto layers = bfs_layers(g, v);
    if (!layers.unreachable.empty())
        throw GraphError("sqrt decomposition requires a connected graph");
    InnerProvider provide =
        inner ? inner : [](const Graph& h) { return heuristic_decomposition(h); };

    SqrtReport rep;
    rep.split = split_levels(layers, lambda, g.n());
    rep.bound = isqrt_floor(9LL * lambda * g.n());

    TreeDecomposition& td = rep.td;
    int conn = -1;  // splice point from the previous interval
    for (const auto& iv : rep.split.intervals) {
        int interval_max_block = 0;
        if (!iv.heavy) {
            // Path of consecutive level pairs; a single-level run is one block.
            int entry = -1, last = -1;
            for (int j = iv.lo; j < iv.hi || (j == iv.lo && iv.lo == iv.hi); ++j) {
                VertexSet block = layers.levels[j];
                if (j + 1 <= iv.hi && iv.lo != iv.hi)
                    block = set_union(block, layers.levels[j + 1]);
                td.blocks.push_back(block);
                td.parent.push_back(last);
                last = td.node_count() - 1;
                if (entry < 0) entry = last;
                interval_max_block =
                    std::max(interval_max_block, static_cast<int>(block.size()));
                if (iv.lo == iv.hi) break;
            }
            td.parent[entry] = conn;
            conn = last;
        } else {
            VertexSet verts;
            for (int j = iv.lo; j <= iv.hi; ++j)
                verts = set_union(verts, layers.levels[j]);
            auto sub = induced_subgraph(g, verts);
            TreeDecomposition in_td = provide(sub.graph);
            VertexSet borders;
            if (iv.lo > 0) borders = set_union(borders, layers.levels[iv.lo - 1]);
            if (iv.hi + 1 < static_cast<int>(layers.levels.size()))
                borders = set_union(borders, layers.levels[iv.hi + 1]);
            int base = td.node_count();
            for (int t = 0; t < in_td.node_count(); ++t) {
                VertexSet block;
                for (Vertex u : in_td.blocks[t]) block.push_back(sub.to_host[u]);
                block = set_union(sorted_unique(std::move(block)), borders);
                td.blocks.push_back(block);
                td.parent.push_back(t == in_td.root ? conn : in_td.parent[t] + base);
                interval_max_block =
                    std::max(interval_max_block, static_cast<int>(block.size()));
            }
            conn = base + in_td.root;
        }
        rep.interval_widths.push_back(interval_max_block - 1);
    }
    for (int t = 0; t < td.node_count(); ++t)
        if (td.parent[t] < 0) td.root = t;
    td.rebuild_children();
    rep.width = width(td);
    return rep;
}

SqrtReport sqrt_decomposition_apex(const Graph& g, int lambda, int mu, const VertexSet& x,
                                   Vertex v, const InnerProvider& inner) {
    if (static_cast<int>(x.size()) > mu)
        throw GraphError("apex set exceeds mu");
    if (set_contains(x, v))
        throw GraphError("center vertex lies in the apex set");
    VertexSet rest;
    for (int u = 0; u < g.n(); ++u)
        if (!set_contains(x, u)) rest.push_back(u);
    auto sub = induced_subgraph(g, rest);
    Vertex v_local =
        static_cast<Vertex>(std::lower_bound(rest.begin(), rest.end(), v) - rest.begin());
    SqrtReport rep = sqrt_decomposition(sub.graph, lambda, v_local, inner);
    for (auto& block : rep.td.blocks) {
        for (Vertex& u : block) u = sub.to_host[u];
        block = set_union(sorted_unique(std::move(block)), x);
    }
    rep.width = width(rep.td);
    rep.bound += mu;
    return rep;
}

}  // namespace treeshift
